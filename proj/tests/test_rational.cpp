// Exact rational arithmetic: canonical form, parsing, ordering, field axioms,
// and the truncating decimal rendering.

#include <catch2/catch_amalgamated.hpp>

#include <mslope/rational.hpp>

#include "test_support.hpp"

using mslope::Rational;
using mslope::validation_error;

TEST_CASE("rational: canonical form and exact string") {
    REQUIRE(Rational(540540, 7572) == Rational(45045, 631));
    REQUIRE(Rational(540540, 7572).numerator() == 45045);
    REQUIRE(Rational(540540, 7572).denominator() == 631);
    REQUIRE(Rational(2, -4).str() == "-1/2");
    REQUIRE(Rational(-6, -3).str() == "2");
    REQUIRE(Rational(0, 17).str() == "0");
    REQUIRE(Rational(78, 11).str() == "78/11");
    REQUIRE(Rational().str() == "0");
    REQUIRE(Rational(7).is_integer());
    REQUIRE_FALSE(Rational(7, 2).is_integer());
    REQUIRE(Rational(-3, 7).sign() == -1);
    REQUIRE(Rational(0).sign() == 0);
    REQUIRE(Rational(1, 9).sign() == 1);
    REQUIRE(Rational(5, 10).is_zero() == false);
    REQUIRE(Rational(0, 3).is_zero());
}

TEST_CASE("rational: construction and division errors") {
    REQUIRE_THROWS_AS(Rational(1, 0), validation_error);
    REQUIRE_THROWS_AS(Rational(3) / Rational(0), validation_error);
    REQUIRE_THROWS_AS(Rational(0) / Rational(0), validation_error);
}

TEST_CASE("rational: parse") {
    REQUIRE(Rational::parse("7") == Rational(7));
    REQUIRE(Rational::parse("-22/7") == Rational(-22, 7));
    REQUIRE(Rational::parse("45045/631") == Rational(45045, 631));
    REQUIRE(Rational::parse("2/-4") == Rational(-1, 2));
    REQUIRE(Rational::parse("006/3") == Rational(2));
    REQUIRE_THROWS_AS(Rational::parse(""), validation_error);
    REQUIRE_THROWS_AS(Rational::parse("abc"), validation_error);
    REQUIRE_THROWS_AS(Rational::parse("1.5"), validation_error);
    REQUIRE_THROWS_AS(Rational::parse("3/"), validation_error);
    REQUIRE_THROWS_AS(Rational::parse("1/0"), validation_error);
}

TEST_CASE("rational: ordering") {
    REQUIRE(Rational(78, 11) > Rational(7));
    REQUIRE(Rational(44414, 6435) < Rational(78, 11));
    REQUIRE(Rational(-1, 2) < Rational(1, 3));
    REQUIRE(Rational(5, 10) == Rational(1, 2));
    REQUIRE(Rational(2, 3) <= Rational(2, 3));
    REQUIRE(Rational(-7) < Rational(-13, 2));
}

TEST_CASE("rational: field axioms on random values") {
    for (int k = 0; k < 200; ++k) {
        const Rational a = testsupport::random_rational();
        const Rational b = testsupport::random_rational();
        const Rational c = testsupport::random_rational();
        REQUIRE(a + b == b + a);
        REQUIRE((a + b) + c == a + (b + c));
        REQUIRE((a + b) * c == a * c + b * c);
        REQUIRE(a + (-a) == Rational(0));
        REQUIRE(a - b == a + (-b));
        if (!b.is_zero()) REQUIRE((a / b) * b == a);
    }
}

TEST_CASE("rational: decimal rendering truncates toward zero") {
    REQUIRE(Rational(-22, 7).decimal(4) == "-3.1428");
    REQUIRE(Rational(22, 7).decimal(4) == "3.1428");
    REQUIRE(Rational(-1, 3).decimal(0) == "0");
    REQUIRE(Rational(-1, 3).decimal(2) == "-0.33");
    REQUIRE(Rational(5, 2).decimal(0) == "2");
    REQUIRE(Rational(1, 8).decimal(3) == "0.125");
    REQUIRE(Rational(1, 8).decimal(5) == "0.12500");
    REQUIRE(Rational(7).decimal(2) == "7.00");
    REQUIRE(Rational(44414, 6435).decimal(4) == "6.9019");
    REQUIRE(Rational(45045, 631).decimal(4) == "71.3866");
    REQUIRE(Rational(45045, 631).decimal(6) == "71.386687");
    REQUIRE(Rational(6435, 631).decimal(4) == "10.1980");
    REQUIRE(Rational(1, 3).decimal(60).size() == 62);
    REQUIRE_THROWS_AS(Rational(1, 3).decimal(-1), validation_error);
    REQUIRE_THROWS_AS(Rational(1, 3).decimal(61), validation_error);
}
