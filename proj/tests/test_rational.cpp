#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wedge/rational.hpp"

using wedge::Rational;

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(-1, 2).str() == "-1/2");
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(-1, 4) == Rational(-2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), wedge::DomainError);
    CHECK_THROWS_AS(Rational(1, 0), wedge::DomainError);
}

TEST_CASE("parse") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational::parse("1/-2"), wedge::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), wedge::ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), wedge::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), wedge::ParseError);
}

TEST_CASE("overflow is detected") {
    Rational big(INT64_MAX);
    CHECK_THROWS_AS(big * Rational(2), wedge::OverflowError);
    CHECK_THROWS_AS(big + Rational(1), wedge::OverflowError);
}
