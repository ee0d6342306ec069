// Genus polynomials: normalization, ring operations, evaluation, rendering,
// and the sample-count contract of poly_identity_check.

#include <catch2/catch_amalgamated.hpp>

#include <mslope/genus_polynomial.hpp>

#include "test_support.hpp"

#include <utility>
#include <vector>

using mslope::GenusPolynomial;
using mslope::poly_identity_check;
using mslope::Rational;
using mslope::validation_error;

TEST_CASE("genus polynomial: normalization and degree") {
    REQUIRE(GenusPolynomial{1, 2, 0, 0}.degree() == 1);
    REQUIRE(GenusPolynomial{}.degree() == -1);
    REQUIRE(GenusPolynomial{0, 0, 0}.degree() == -1);
    REQUIRE(GenusPolynomial{}.is_zero());
    REQUIRE((GenusPolynomial{1, 2, 0, 0} == GenusPolynomial{1, 2}));
    REQUIRE(GenusPolynomial::variable().degree() == 1);
    REQUIRE(GenusPolynomial::constant(5).degree() == 0);
    REQUIRE(GenusPolynomial::constant(0).degree() == -1);
}

TEST_CASE("genus polynomial: coefficient access") {
    const GenusPolynomial p{2, -9, 6, 13};
    REQUIRE(p.coeff(0) == Rational(2));
    REQUIRE(p.coeff(3) == Rational(13));
    REQUIRE(p.coeff(4) == Rational(0));
    REQUIRE(p.coeff(-1) == Rational(0));
}

TEST_CASE("genus polynomial: evaluation") {
    const GenusPolynomial p{2, -9, 6, 13}; // 13g^3 + 6g^2 - 9g + 2
    REQUIRE(p.eval(3) == Rational(380));
    REQUIRE(p.eval(4) == Rational(894));
    REQUIRE(p.eval(Rational(1, 2)) == Rational(5, 8));
    REQUIRE(GenusPolynomial{}.eval(17) == Rational(0));
}

TEST_CASE("genus polynomial: degree cap") {
    REQUIRE_THROWS_AS((GenusPolynomial{0, 0, 0, 0, 0, 0, 0, 0, 0, 1}), validation_error);
    const GenusPolynomial g5{0, 0, 0, 0, 0, 1};
    const GenusPolynomial g4{0, 0, 0, 0, 1};
    REQUIRE_THROWS_AS(g5 * g4, validation_error);
    REQUIRE((g4 * g4).degree() == 8);
}

TEST_CASE("genus polynomial: ring operations commute with evaluation") {
    auto random_poly = [] {
        std::uniform_int_distribution<int> deg(0, 3);
        std::vector<Rational> c(static_cast<size_t>(deg(testsupport::rng())) + 1);
        for (auto& x : c) x = testsupport::random_rational();
        return GenusPolynomial(std::move(c));
    };
    for (int k = 0; k < 100; ++k) {
        const GenusPolynomial p = random_poly();
        const GenusPolynomial q = random_poly();
        const Rational g = testsupport::random_rational();
        REQUIRE((p + q).eval(g) == p.eval(g) + q.eval(g));
        REQUIRE((p - q).eval(g) == p.eval(g) - q.eval(g));
        REQUIRE((p * q).eval(g) == p.eval(g) * q.eval(g));
        REQUIRE((Rational(3, 2) * p).eval(g) == Rational(3, 2) * p.eval(g));
    }
}

TEST_CASE("genus polynomial: rendering") {
    REQUIRE(GenusPolynomial{2, -9, 6, 13}.str() == "13*g^3 + 6*g^2 - 9*g + 2");
    REQUIRE(GenusPolynomial{}.str() == "0");
    REQUIRE(GenusPolynomial{0, -1}.str() == "-g");
    REQUIRE(GenusPolynomial{0, 0, 1}.str() == "g^2");
    REQUIRE(GenusPolynomial{Rational(1, 2)}.str() == "1/2");
    REQUIRE((GenusPolynomial{-3, 0, Rational(1, 4)}.str()) == "1/4*g^2 - 3");
}

TEST_CASE("poly identity check: demands enough distinct samples") {
    const GenusPolynomial p{0, 1}; // the identity polynomial g
    auto f = [](long g) { return Rational(g); };
    REQUIRE(poly_identity_check(p, f, 1, {2, 3}));
    REQUIRE(poly_identity_check(p, f, 1, {2, 2, 3})); // duplicates collapse
    REQUIRE_THROWS_AS(poly_identity_check(p, f, 2, {2, 3}), validation_error);
    auto wrong = [](long g) { return Rational(g + 1); };
    REQUIRE_FALSE(poly_identity_check(p, wrong, 1, {2, 3}));
}
