#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aode/factor.hpp"
#include "aode/parser.hpp"

using namespace aode;

namespace {

UniPoly T() { return UniPoly::variable("t"); }
UniPoly C(long n) { return UniPoly::constant(Rational(n), "t"); }

}  // namespace

TEST_CASE("univariate factorization") {
    // t^4 + 4 = (t^2 - 2t + 2)(t^2 + 2t + 2): needs the trial-divisor split.
    auto fs = factor_unipoly(T().pow(4) + C(4));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly * fs[1].poly == T().pow(4) + C(4));
    CHECK(fs[0].multiplicity == 1);

    // (t-1)^2 (t^2+t+1), leading constant dropped.
    UniPoly f = C(3) * (T() - C(1)).pow(2) * (T() * T() + T() + C(1));
    fs = factor_unipoly(f);
    REQUIRE(fs.size() == 2);
    CHECK(is_irreducible_unipoly(T() * T() + T() + C(1)));
    CHECK(is_irreducible_unipoly(T().pow(3) - C(2)));
    CHECK(!is_irreducible_unipoly(T() * T() - C(1)));
    CHECK(!is_irreducible_unipoly((T() - C(1)).pow(2)));
}

TEST_CASE("bivariate factorization and irreducibility") {
    QPoly g = parse_algebraic("x^2 - t");
    CHECK(is_irreducible_bipoly(g));
    CHECK(is_irreducible_bipoly(parse_algebraic("x - t^3")));
    CHECK(is_irreducible_bipoly(parse_algebraic("x^2 - 2")));
    CHECK(!is_irreducible_bipoly(parse_algebraic("x^2 - t^2")));
    CHECK(!is_irreducible_bipoly(parse_algebraic("t*x - t")));        // content t
    CHECK(!is_irreducible_bipoly(parse_algebraic("x^2 - 2*t*x + t^2")));  // square

    auto fs = factor_bipoly(parse_algebraic("x^2 - t^2"));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly * fs[1].poly == parse_algebraic("x^2 - t^2"));
}

TEST_CASE("polynomial square roots") {
    QPoly sq = parse_algebraic("t^2*x^2 + 2*t*x + 1");
    auto r = sqrt_poly(sq);
    REQUIRE(r.has_value());
    CHECK(*r * *r == sq);
    CHECK(!sqrt_poly(parse_algebraic("x^2 - t")).has_value());
    CHECK(!sqrt_poly(parse_algebraic("x^3")).has_value());
    CHECK(sqrt_poly(parse_algebraic("x^2") - parse_algebraic("x^2")).has_value());  // zero
}

TEST_CASE("roots in Q(t)") {
    // x^2 - t^2: roots t and -t.
    auto roots = poly_roots_in_qt({-(T() * T()), UniPoly("t"), C(1)});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == -RatFunc::variable("t"));
    CHECK(roots[1] == RatFunc::variable("t"));

    //  (t^2+1) x - (t^3+t) has root t.
    roots = poly_roots_in_qt({-(T().pow(3) + T()), T() * T() + C(1)});
    REQUIRE(roots.size() == 1);
    CHECK(roots[0] == RatFunc::variable("t"));

    // t x^2 - (t+1) x + 1 = (t x - 1)(x - 1): roots 1 and 1/t.
    roots = poly_roots_in_qt({C(1), -(T() + C(1)), UniPoly::variable("t")});
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == RatFunc(Rational(1)));
    CHECK(roots[1] == RatFunc(C(1), T()));

    // x^2 + 1 has no roots in Q(t); x^2 keeps only the zero root.
    CHECK(poly_roots_in_qt({C(1), UniPoly("t"), C(1)}).empty());
    auto zero_roots = poly_roots_in_qt({UniPoly("t"), UniPoly("t"), C(1)});
    REQUIRE(zero_roots.size() == 1);
    CHECK(zero_roots[0].is_zero());
}

TEST_CASE("irreducibility over Q(t)") {
    CHECK(is_irreducible_over_qt(parse_aode("2*y' + t*y^3 + y^2").poly()));
    CHECK(!is_irreducible_over_qt(parse_aode("y*y' + y^3").poly()));  // y (y' + y^2)
    CHECK(is_irreducible_over_qt(parse_aode("y'^2 - y").poly()));
    CHECK(is_irreducible_over_qt(parse_aode("y'^2 + y").poly()));
    CHECK(is_irreducible_over_qt(parse_aode("t*y' - 5*y").poly()));
    CHECK(is_irreducible_over_qt(parse_aode("y*y'^2 + y^5 + t").poly()));
    CHECK(is_irreducible_over_qt(parse_aode("y*y'^3 + y^7 + t").poly()));
    // quadratic in y' with square discriminant: y'^2 - 2 y y' + y^2 = (y' - y)^2
    CHECK(!is_irreducible_over_qt(parse_aode("y'^2 - 2*y*y' + y^2").poly()));
    // (y' - y)(y' + t y) expanded
    CHECK(!is_irreducible_over_qt(parse_aode("y'^2 + t*y*y' - y*y' - t*y^2").poly()));
    // quadratic pivot in y with square discriminant: (y' - t y)(y'^2 + y)
    CHECK(!is_irreducible_over_qt(
        parse_aode("y'^3 - t*y*y'^2 + y*y' - t*y^2").poly()));
    // cubic pivot in y' with the linear factor (y' - t y): (y' - t y)(y'^2 + y^4)
    CHECK(!is_irreducible_over_qt(
        parse_aode("y'^3 + y^4*y' - t*y*y'^2 - t*y^5").poly()));
    CHECK(is_irreducible_over_qt(parse_aode("y'^3 - y + t").poly()));
    // min(deg_y, deg_y') > 3 is out of the supported range
    CHECK_THROWS_AS(is_irreducible_over_qt(parse_aode("y'^4 + y^4 + t").poly()),
                    UnsupportedRangeError);
}

TEST_CASE("irreducibility over Q(t), spec surface over RatFunc") {
    QtPoly f = to_qt_coeffs(parse_aode("2*y' + t*y^3 + y^2").poly());
    CHECK(is_irreducible_bivariate(f));
}

TEST_CASE("denominator clearing round trip") {
    QtPoly f = to_qt_coeffs(parse_aode("2*y' + t*y^3 + y^2").poly());
    QPoly cleared = clear_denominators(f);
    CHECK(cleared == parse_aode("2*y' + t*y^3 + y^2").poly());
}
