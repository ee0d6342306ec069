#pragma once

// Named divisor classes and scalar formulas, as constructors, together with
// the closed-form coefficient polynomials they satisfy.

#include <string>

#include "mslope/classes.hpp"
#include "mslope/errors.hpp"
#include "mslope/genus_polynomial.hpp"
#include "mslope/rational.hpp"

namespace mslope {

// delta_0 convention for the pointed canonical class: the published form of
// K_{Mbar_{g,1}} carries no delta_0 term; the standard convention includes
// -2 delta_0. Downstream reports never pick a winner; they compute under the
// convention they are handed (or both).
enum class Convention { published, standard };

inline std::string convention_tag(Convention c) { return c == Convention::published ? "published" : "standard"; }

namespace detail {
inline bool is_composite(long n) {
    if (n < 4) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return true;
    return false;
}
} // namespace detail

// W: the pointed Weierstrass divisor, the locus of pointed curves whose
// marked point is a Weierstrass point:
//
//   W = -lambda + g(g+1)/2 psi - sum_{i=1}^{g-1} C(g-i+1, 2) delta_i.
inline PointedDivisorClass weierstrass(int g) {
    validate_genus(g);
    PointedDivisorClass w(g);
    w.lambda = -1;
    w.psi = Rational(static_cast<long>(g) * (g + 1), 2);
    for (int i = 1; i <= g - 1; ++i) {
        const long n = g - i + 1; // C(n, 2) with n = g-i+1
        w.delta[static_cast<size_t>(i)] = Rational(-n * (n - 1), 2);
    }
    return w;
}

// The Brill-Noether divisor class (normalized so the i-indexed coefficients
// are exactly i(g-i)):
//
//   (g+3) lambda - (g+1)/6 delta_0 - sum_{i>=1} i(g-i) delta_i,
//
// which exists only when g+1 is composite. Its slope is 6 + 12/(g+1).
inline DivisorClass brill_noether(int g) {
    validate_genus(g);
    if (!detail::is_composite(g + 1))
        throw validation_error("brill_noether: no Brill-Noether divisor at genus " + std::to_string(g) + " (" +
                               std::to_string(g + 1) + " is prime)");
    DivisorClass d(g);
    d.lambda = g + 3;
    d.delta[0] = Rational(-(g + 1), 6);
    for (int i = 1; i <= g / 2; ++i) d.delta[static_cast<size_t>(i)] = -static_cast<long>(i) * (g - i);
    return d;
}

// Slope of the Petri divisor, the fallback effective divisor when g+1 is
// prime; only its slope is needed, so no class constructor is provided.
inline Rational petri_slope(int g) {
    validate_genus(g);
    if (g % 2 != 0) throw validation_error("petri_slope: defined for even genus only, got " + std::to_string(g));
    const long gl = g;
    return Rational(2 * (3 * gl * gl + 13 * gl + 2), gl * (gl + 2));
}

// Kbar: the closure in the genus-10 space of the locus of smooth curves lying
// on a K3 surface. Only the lambda, delta_0, delta_1, delta_2 coefficients of
// its class are on record; delta_3, delta_4, delta_5 stay Unknown.
inline PartialDivisorClass k3_divisor() {
    PartialDivisorClass d(Space::Mg, 10);
    d.lambda = Rational(7);
    d.delta[0] = Rational(-1);
    d.delta[1] = Rational(-5);
    d.delta[2] = Rational(-9);
    d.delta[3] = Coeff::unknown();
    d.delta[4] = Coeff::unknown();
    d.delta[5] = Coeff::unknown();
    return d;
}

// The canonical class of the pointed space:
//
//   13 lambda + psi - 3(delta_1 + delta_{g-1}) - 2 sum_{i=2}^{g-2} delta_i,
//
// plus -2 delta_0 under Convention::standard (see Convention above).
inline PointedDivisorClass canonical_pointed(int g, Convention conv) {
    validate_genus(g);
    if (g < 3) throw validation_error("canonical_pointed: needs genus >= 3, got " + std::to_string(g));
    PointedDivisorClass k(g);
    k.lambda = 13;
    k.psi = 1;
    if (conv == Convention::standard) k.delta[0] = -2;
    k.delta[1] = -3;
    k.delta[static_cast<size_t>(g - 1)] = -3;
    for (int i = 2; i <= g - 2; ++i) k.delta[static_cast<size_t>(i)] = -2;
    return k;
}

// Closed-form coefficient polynomials of pi_*(W^2) = a lambda - sum b_i delta_i,
// as polynomials in the genus:
//
//   a       = g(g+1)(3g^2+g+2)
//   b_0     = g^2 (g+1)^2 / 4
//   b_i     = i(g-i) (g^3+3g^2+g-1)        for 1 <= i < g/2
//   b_{g/2} = (8g^5+33g^4+28g^3+4g^2)/64   for even g.
inline const GenusPolynomial& pushed_square_lambda_poly() {
    static const GenusPolynomial p =
        GenusPolynomial::variable() * (GenusPolynomial::variable() + GenusPolynomial::constant(1)) *
        GenusPolynomial{2, 1, 3};
    return p;
}
inline const GenusPolynomial& pushed_square_delta0_poly() {
    static const GenusPolynomial p = [] {
        const GenusPolynomial g = GenusPolynomial::variable();
        const GenusPolynomial gp1 = g + GenusPolynomial::constant(1);
        return Rational(1, 4) * (g * g * gp1 * gp1);
    }();
    return p;
}
inline const GenusPolynomial& pushed_square_tail_factor_poly() {
    static const GenusPolynomial p{-1, 1, 3, 1}; // g^3 + 3g^2 + g - 1
    return p;
}
inline const GenusPolynomial& pushed_square_middle_poly() {
    static const GenusPolynomial p = Rational(1, 64) * GenusPolynomial{0, 0, 4, 28, 33, 8};
    return p;
}

// The same pushforward assembled from the closed forms instead of the rule
// table; the two constructions agreeing for every genus is what certifies the
// polynomials.
inline DivisorClass pushed_weierstrass_square_closed(int g) {
    validate_genus(g);
    DivisorClass d(g);
    d.lambda = pushed_square_lambda_poly().eval(g);
    d.delta[0] = -pushed_square_delta0_poly().eval(g);
    for (int i = 1; i <= g / 2; ++i) {
        if (2 * i == g)
            d.delta[static_cast<size_t>(i)] = -pushed_square_middle_poly().eval(g);
        else
            d.delta[static_cast<size_t>(i)] =
                -(Rational(i) * Rational(g - i) * pushed_square_tail_factor_poly().eval(g));
    }
    return d;
}

} // namespace mslope
