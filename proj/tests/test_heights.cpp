#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aode/heights.hpp"
#include "aode/parser.hpp"

using namespace aode;

namespace {

RatFunc random_ratfunc(std::mt19937_64& rng, int max_deg = 3) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(-4, 4);
    auto poly = [&](bool monic_nonzero) {
        UniPoly p("t");
        const int d = deg(rng);
        for (int i = 0; i <= d; ++i) p.set_coeff(i, Rational(coeff(rng)));
        if (monic_nonzero && p.is_zero()) p.set_coeff(d, Rational(1));
        return p;
    };
    return RatFunc(poly(false), poly(true));
}

}  // namespace

TEST_CASE("height of rational functions") {
    CHECK(height_ratfunc(parse_ratfunc("t^4")) == Height(4));
    CHECK(height_ratfunc(parse_ratfunc("7/3")) == Height(0));
    CHECK(height_ratfunc(parse_ratfunc("t^2/(t^3+1)")) == Height(3));
    // Reduction happens first: (t^2 + t)/t has height 1.
    CHECK(height_ratfunc(parse_ratfunc("(t^2 + t)/t")) == Height(1));
}

TEST_CASE("height of points") {
    CHECK(height_point(parse_point("t^2, t^3 + 1, 1")) == Height(3));
    CHECK(height_point(parse_point("1, 0, 0")) == Height(0));
    CHECK(height_point(parse_point("t*(t+1), t*t^2, t")) == Height(2));
    CHECK_THROWS_AS(height_point(parse_point("0, 0")), PreconditionError);
    // Invariance under scaling by a nonzero rational function.
    auto p1 = height_point(parse_point("t^2, t^3 + 1, 1"));
    auto p2 = height_point(parse_point("t^2*(t-5), (t^3 + 1)*(t-5), t-5"));
    CHECK(p1 == p2);
}

TEST_CASE("height of polynomials") {
    CHECK(height_poly(parse_poly_over_qt("x0^2 - (t^3+1)*x0 + t^3")) == Height(3));
    CHECK(height_poly(parse_poly_over_qt("5*x0^3*x1")) == Height(0));  // single term
    CHECK(height_poly(parse_poly_over_qt("t*x0 + t^2")) == Height(1));
}

TEST_CASE("height of matrices") {
    CHECK(height_matrix(parse_matrix("1,0,0; 0,1,0; 0,0,1")) == Height(0));
    CHECK(height_matrix(parse_matrix("t,0,0; 0,1,0; 0,0,1")) == Height(1));
    CHECK(height_matrix(parse_matrix("2,3,0; 1,1,0; 0,0,5")) == Height(0));
    CHECK_THROWS_AS(height_matrix(parse_matrix("1,1,0; 1,1,0; 0,0,1")), PreconditionError);
}

TEST_CASE("height of algebraic elements") {
    CHECK(height_algebraic({parse_algebraic("x^2 - t")}) == Height(Rational(1, 2)));
    CHECK(height_algebraic({parse_algebraic("x - t^3")}) == Height(3));
    CHECK(height_algebraic({parse_algebraic("x^2 - 2")}) == Height(0));
    CHECK_THROWS_AS(height_algebraic({parse_algebraic("x^2 - t^2")}), PreconditionError);
    CHECK_THROWS_AS(height_algebraic({parse_algebraic("t^2 - 2")}), PreconditionError);
}

TEST_CASE("agreement between ratfunc and algebraic heights") {
    // x - t^3 describes the rational element t^3.
    CHECK(height_algebraic({parse_algebraic("x - t^3")}) ==
          height_ratfunc(parse_ratfunc("t^3")));
}

TEST_CASE("Moebius invariance") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long> cdist(-5, 5);
    int done = 0;
    while (done < 100) {
        RatFunc a = random_ratfunc(rng);
        Rational c1(cdist(rng)), c2(cdist(rng)), c3(cdist(rng)), c4(cdist(rng));
        if ((c1 * c4 - c2 * c3).is_zero()) continue;
        RatFunc den = RatFunc(c3) * a + RatFunc(c4);
        if (den.is_zero()) continue;
        RatFunc m = (RatFunc(c1) * a + RatFunc(c2)) / den;
        CHECK(height_ratfunc(m) == height_ratfunc(a));
        ++done;
    }
}

TEST_CASE("subadditivity and the paper equality witness") {
    RatFunc a = parse_ratfunc("t^2"), b = parse_ratfunc("t^3 + 1");
    CHECK(height_ratfunc(a * b) == Height(5));  // equality case
    CHECK(height_ratfunc(a.inverse() + b.inverse()) == Height(5));
    std::mt19937_64 rng(103);
    std::uniform_int_distribution<long> lam(-4, 4);
    for (int i = 0; i < 100; ++i) {
        RatFunc x = random_ratfunc(rng), y = random_ratfunc(rng);
        const Rational hx = height_ratfunc(x).value(), hy = height_ratfunc(y).value();
        CHECK(height_ratfunc(x * y).value() <= hx + hy);
        CHECK(height_ratfunc(x + RatFunc(Rational(lam(rng))) * y).value() <= hx + hy);
    }
}

TEST_CASE("power rule") {
    std::mt19937_64 rng(107);
    for (int i = 0; i < 40; ++i) {
        RatFunc a = random_ratfunc(rng, 2);
        if (a.is_zero()) continue;
        const Rational h = height_ratfunc(a).value();
        for (int e = -3; e <= 3; ++e)
            CHECK(height_ratfunc(a.pow(e)).value() == Rational(std::abs(e)) * h);
    }
}

TEST_CASE("factor monotonicity") {
    std::mt19937_64 rng(109);
    std::vector<std::string> xv{"x"};
    for (int i = 0; i < 60; ++i) {
        QtPoly g(xv), h(xv);
        std::uniform_int_distribution<int> deg(0, 2);
        const int dg = deg(rng), dh = deg(rng);
        for (int k = 0; k <= dg; ++k) g.add_term({k}, random_ratfunc(rng, 2));
        for (int k = 0; k <= dh; ++k) h.add_term({k}, random_ratfunc(rng, 2));
        if (g.is_zero() || h.is_zero()) continue;
        QtPoly f = g * h;
        if (f.term_count() == 1 || g.term_count() == 1) continue;
        CHECK(height_poly(g).value() <= height_poly(f).value());
    }
}

TEST_CASE("root bound with tightness witness") {
    // f = (x - t^3)(x - 1): T(t^3) = T(f) = 3.
    QtPoly f = parse_poly_over_qt("x0^2 - (t^3+1)*x0 + t^3");
    CHECK(height_poly(f) == Height(3));
    CHECK(height_ratfunc(parse_ratfunc("t^3")) == Height(3));
    std::mt19937_64 rng(113);
    std::vector<std::string> xv{"x"};
    for (int i = 0; i < 60; ++i) {
        RatFunc r1 = random_ratfunc(rng, 2), r2 = random_ratfunc(rng, 2);
        QtPoly x = QtPoly::variable(xv, 0);
        QtPoly monic = (x - QtPoly::constant(xv, r1)) * (x - QtPoly::constant(xv, r2));
        if (monic.term_count() == 1) continue;
        const Rational hf = height_poly(monic).value();
        CHECK(height_ratfunc(r1).value() <= hf);
        CHECK(height_ratfunc(r2).value() <= hf);
    }
}

TEST_CASE("resultant height bound") {
    std::mt19937_64 rng(127);
    std::vector<std::string> xz{"x", "z"};
    int done = 0;
    while (done < 30) {
        QtPoly f(xz), g(xz);
        std::uniform_int_distribution<int> deg(0, 2);
        for (int a = 0; a <= deg(rng); ++a)
            for (int b = 0; b <= deg(rng); ++b) f.add_term({a, b}, random_ratfunc(rng, 1));
        for (int a = 0; a <= deg(rng); ++a)
            for (int b = 0; b <= deg(rng); ++b) g.add_term({a, b}, random_ratfunc(rng, 1));
        if (f.is_zero() || g.is_zero()) continue;
        if (f.degree(1) == 0 || g.degree(1) == 0) continue;
        QtPoly r = resultant(f, g, "z");
        if (r.is_zero()) continue;
        const Rational bound = Rational(g.degree(1)) * height_poly(f).value() +
                               Rational(f.degree(1)) * height_poly(g).value();
        const Rational hr = r.term_count() == 1 ? Rational(0) : height_poly(r).value();
        CHECK(hr <= bound);
        ++done;
    }
}
