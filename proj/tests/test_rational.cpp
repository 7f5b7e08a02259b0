#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aode/rational.hpp"

using namespace aode;

TEST_CASE("construction keeps canonical form") {
    Rational a(6, 4);
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);
    Rational b(-6, -4);
    CHECK(b == a);
    Rational c(3, -2);
    CHECK(c == -a);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(a.pow(3) == Rational(1, 8));
    CHECK(a.pow(-2) == Rational(4));
    CHECK(Rational(0).pow(0) == Rational(1));
}

TEST_CASE("string round trips") {
    CHECK(Rational::from_string("22/7") == Rational(22, 7));
    CHECK(Rational::from_string("-5") == Rational(-5));
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-4, 2).str() == "-2");
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
}

TEST_CASE("exact square roots") {
    CHECK(Rational(9, 4).sqrt_exact() == Rational(3, 2));
    CHECK(!Rational(2).sqrt_exact().has_value());
    CHECK(!Rational(-1).sqrt_exact().has_value());
    CHECK(Rational(0).sqrt_exact() == Rational(0));
}

TEST_CASE("powers of two") {
    CHECK(pow2(10) == Rational(1024));
    CHECK(pow2(-2) == Rational(1, 4));
    CHECK(pow2(0) == Rational(1));
}
