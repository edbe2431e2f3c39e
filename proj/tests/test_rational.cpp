#include <doctest.h>

#include "vopkit/rational.hpp"

using namespace vopkit;

TEST_CASE("rationals are stored in lowest terms with positive denominator") {
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(42).str() == "42");
    CHECK(Rational(5, 1).den() == 1);
}

TEST_CASE("string round trip uses the canonical num/den form") {
    CHECK(Rational::from_string("3/4").str() == "3/4");
    CHECK(Rational::from_string("-7").str() == "-7");
    CHECK(Rational::from_string("6/4").str() == "3/2");
    CHECK(Rational::from_string("0/9").str() == "0");
    CHECK(Rational::from_string("123456789012345678901234567890/2").str() ==
          "61728394506172839450617283945");

    CHECK_THROWS_AS(Rational::from_string("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("abc"), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1.5"), ParseError);
    CHECK_THROWS_AS(Rational::from_string(""), ParseError);
    CHECK_THROWS_AS(Rational::from_string("1/"), ParseError);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a < Rational(1, 2));
    CHECK_THROWS_AS(a / Rational(0), Error);

    // 1/3 has no finite binary expansion; summing it three times must hit 1.
    CHECK(a + a + a == Rational(1));
}

TEST_CASE("integer helpers") {
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(pow(Rational(5), 0) == Rational(1));
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
}
