#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aode/unipoly.hpp"

using namespace aode;

namespace {

UniPoly T() { return UniPoly::variable("t"); }
UniPoly C(long n) { return UniPoly::constant(Rational(n), "t"); }

UniPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-4, 4);
    UniPoly p("t");
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) p.set_coeff(i, Rational(coeff(rng)));
    return p;
}

}  // namespace

TEST_CASE("gcd examples") {
    CHECK(poly_gcd(T() * T() - C(1), T() - C(1)) == T() - C(1));
    CHECK(poly_gcd(T().pow(3), UniPoly("t")) == T().pow(3));
    CHECK(poly_gcd(T() * T() + C(1), T() * T() + T()) == C(1));
    CHECK(poly_gcd(UniPoly("t"), UniPoly("t")).is_zero());
    CHECK_THROWS_AS(poly_gcd(UniPoly::variable("t") + C(1), UniPoly::variable("s")),
                    std::invalid_argument);
}

TEST_CASE("gcd divides both operands") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        UniPoly a = random_poly(rng, 5), b = random_poly(rng, 5);
        UniPoly g = poly_gcd(a, b);
        if (g.is_zero()) {
            CHECK(a.is_zero());
            CHECK(b.is_zero());
            continue;
        }
        CHECK(g.divides(a));
        CHECK(g.divides(b));
        CHECK(g.leading_coeff().is_one());
    }
}

TEST_CASE("squarefree part examples") {
    UniPoly f = (T() - C(1)).pow(2) * (T() + C(2));
    CHECK(squarefree_part(f) == (T() - C(1)) * (T() + C(2)));
    CHECK(squarefree_part(T().pow(5)) == T());
    CHECK(squarefree_part(T() * T() + C(1)) == T() * T() + C(1));
    CHECK_THROWS_AS(squarefree_part(UniPoly("t")), std::domain_error);
}

TEST_CASE("squarefree properties") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        UniPoly f = random_poly(rng, 4);
        if (f.is_zero() || f.is_constant()) continue;
        UniPoly s = squarefree_part(f);
        CHECK((s * s).divides(f * s));
        for (int k = 2; k <= 3; ++k) CHECK(squarefree_part(f.pow(k)) == s);
    }
}

TEST_CASE("division and derivative") {
    UniPoly f = T().pow(3) - C(1);
    auto [q, r] = f.divmod(T() - C(1));
    CHECK(r.is_zero());
    CHECK(q == T() * T() + T() + C(1));
    CHECK(f.derivative() == C(3) * T() * T());
    CHECK(T().pow(4).eval(Rational(2)) == Rational(16));
    CHECK_THROWS_AS(f.exact_div(T() + C(1)), std::domain_error);
}

TEST_CASE("Yun decomposition") {
    UniPoly f = (T() - C(1)).pow(3) * (T() + C(2)).pow(2) * (T() * T() + C(1));
    auto parts = squarefree_decomposition(f);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].multiplicity == 1);
    CHECK(parts[0].poly == T() * T() + C(1));
    CHECK(parts[1].multiplicity == 2);
    CHECK(parts[1].poly == T() + C(2));
    CHECK(parts[2].multiplicity == 3);
    CHECK(parts[2].poly == T() - C(1));
}

TEST_CASE("rational roots") {
    // 6 t^3 - 5 t^2 - 2 t + 1 = (t - 1)(2t + 1)(3t - 1)
    UniPoly f = (T() - C(1)) * (C(2) * T() + C(1)) * (C(3) * T() - C(1));
    auto roots = rational_roots(f);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0].first == Rational(-1, 2));
    CHECK(roots[1].first == Rational(1, 3));
    CHECK(roots[2].first == Rational(1));
    for (const auto& [r, m] : roots) CHECK(m == 1);

    auto with_mult = rational_roots(T().pow(2) * (T() - C(3)).pow(3));
    REQUIRE(with_mult.size() == 2);
    CHECK(with_mult[0] == std::pair{Rational(0), 2});
    CHECK(with_mult[1] == std::pair{Rational(3), 3});

    CHECK(rational_roots(T() * T() + C(1)).empty());
}

TEST_CASE("printing is canonical") {
    UniPoly f = C(2) * T().pow(3) - T() + C(5);
    CHECK(f.str() == "2*t^3 - t + 5");
    CHECK(UniPoly("t").str() == "0");
    CHECK((-T()).str() == "-t");
}
