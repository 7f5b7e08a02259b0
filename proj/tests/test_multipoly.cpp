#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aode/multipoly.hpp"
#include "aode/projective.hpp"

using namespace aode;

namespace {

const std::vector<std::string> XT{"x", "t"};

QPoly X() { return QPoly::variable(XT, 0); }
QPoly Tv() { return QPoly::variable(XT, 1); }
QPoly C(long n) { return QPoly::constant(XT, Rational(n)); }

QPoly random_poly(std::mt19937_64& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-3, 3);
    QPoly p(XT);
    const int dx = deg(rng), dt = deg(rng);
    for (int i = 0; i <= dx; ++i)
        for (int j = 0; j <= dt; ++j) p.add_term({i, j}, Rational(coeff(rng)));
    return p;
}

}  // namespace

TEST_CASE("arithmetic and ordering") {
    QPoly f = X() * X() + Tv() * X() + C(1);
    CHECK(f.total_degree() == 2);
    CHECK(f.degree(0) == 2);
    CHECK(f.degree(1) == 1);
    CHECK(f.str() == "x^2 + x*t + 1");  // graded-lex, leading first
    CHECK((f - f).is_zero());
    CHECK(f.pow(0) == C(1));
    CHECK((X() + Tv()).pow(2) == X() * X() + C(2) * X() * Tv() + Tv() * Tv());
}

TEST_CASE("exact division") {
    QPoly f = (X() + Tv()) * (X() - Tv());
    auto q = f.divide_exact(X() + Tv());
    REQUIRE(q.has_value());
    CHECK(*q == X() - Tv());
    CHECK(!f.divide_exact(X() + C(1)).has_value());
    CHECK_THROWS_AS(f.divide_exact(QPoly(XT)), std::domain_error);
}

TEST_CASE("resultant examples") {
    // res_x(x^2 - t, x - 1) = 1 - t via the 3x3 Sylvester determinant.
    CHECK(resultant(X() * X() - Tv(), X() - C(1), "x") == C(1) - Tv());
    // res_x(x^2 + 1, x^2 - 1) = 4 via the 4x4 determinant.
    CHECK(resultant(X() * X() + C(1), X() * X() - C(1), "x") == C(4));
    // Common factor: res vanishes.
    CHECK(resultant(X() - Tv(), X() - Tv(), "x").is_zero());
    CHECK_THROWS_AS(resultant(QPoly(XT), X(), "x"), std::invalid_argument);
    CHECK_THROWS_AS(resultant(Tv(), Tv() + C(1), "x"), std::invalid_argument);
}

TEST_CASE("resultant multiplicativity on random inputs") {
    std::mt19937_64 rng(23);
    int done = 0;
    while (done < 40) {
        QPoly f = random_poly(rng, 2), g = random_poly(rng, 2), h = random_poly(rng, 2);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        if (f.degree(0) == 0 && g.degree(0) == 0 && h.degree(0) == 0) continue;
        CHECK(resultant(f * g, h, "x") == resultant(f, h, "x") * resultant(g, h, "x"));
        ++done;
    }
}

TEST_CASE("resultant vanishes iff gcd has positive degree in x") {
    std::mt19937_64 rng(29);
    int done = 0;
    while (done < 60) {
        QPoly f = random_poly(rng, 2), g = random_poly(rng, 2);
        if (f.is_zero() || g.is_zero()) continue;
        if (f.degree(0) == 0 || g.degree(0) == 0) continue;
        const bool res_zero = resultant(f, g, "x").is_zero();
        const bool common = multi_gcd(f, g).degree(0) > 0;
        CHECK(res_zero == common);
        ++done;
    }
}

TEST_CASE("multivariate gcd") {
    QPoly f = (X() + Tv()).pow(2) * (X() - C(2));
    QPoly g = (X() + Tv()) * (X() + C(5));
    QPoly d = multi_gcd(f, g);
    CHECK(d == X() + Tv());
    CHECK(multi_gcd(f, QPoly(XT)) == f.normalized());
    CHECK(multi_gcd(C(6), f).is_constant());
}

TEST_CASE("homogenize and dehomogenize") {
    // y^2 - t^3 with (x0 = t, x1 = y) homogenizes to x1^2 x2 - x0^3.
    std::vector<std::string> affine{"x0", "x1"};
    QPoly t01 = QPoly::variable(affine, 0);
    QPoly y01 = QPoly::variable(affine, 1);
    QPoly f = y01 * y01 - t01.pow(3);
    ProjPoly<Rational> F = homogenize(f);
    QPoly expect(proj_vars());
    expect.set_term({0, 2, 1}, Rational(1));
    expect.set_term({3, 0, 0}, Rational(-1));
    CHECK(F.poly() == expect);
    CHECK(dehomogenize(F, 2) == f);

    // Round trip: homog(dehomog(x0*x1, 2)) = x0*x1.
    QPoly m(proj_vars());
    m.set_term({1, 1, 0}, Rational(1));
    ProjPoly<Rational> M(m);
    CHECK(homogenize(dehomogenize(M, 2)).poly() == m);

    CHECK_THROWS_AS(ProjPoly<Rational>(QPoly(proj_vars())), PreconditionError);
    QPoly inhom(proj_vars());
    inhom.set_term({1, 0, 0}, Rational(1));
    inhom.set_term({0, 2, 0}, Rational(1));
    CHECK_THROWS_AS(ProjPoly<Rational>(inhom), PreconditionError);
}

TEST_CASE("homogenize preserves total degree on random inputs") {
    std::mt19937_64 rng(31);
    std::vector<std::string> affine{"x0", "x1"};
    for (int i = 0; i < 50; ++i) {
        QPoly p(affine);
        std::uniform_int_distribution<int> deg(0, 3);
        std::uniform_int_distribution<long> coeff(-3, 3);
        for (int a = 0; a <= deg(rng); ++a)
            for (int b = 0; b <= deg(rng); ++b) p.add_term({a, b}, Rational(coeff(rng)));
        if (p.is_zero()) continue;
        ProjPoly<Rational> F = homogenize(p);
        CHECK(F.degree() == p.total_degree());
        CHECK(dehomogenize(F, 2) == p);
    }
}

TEST_CASE("composition and substitution") {
    QPoly f = X() * X() + Tv();
    QPoly g = f.subst(0, X() + Tv());
    CHECK(g == (X() + Tv()).pow(2) + Tv());
    CHECK(f.eval({Rational(2), Rational(3)}) == Rational(7));
    CHECK(f.partial_eval(1, Rational(5)) == X() * X() + C(5));
}
