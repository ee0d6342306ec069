#pragma once

// Test curves as intersection functionals. A curve class is nothing but its
// pairing numbers against the divisor basis of one space; no family geometry
// (base points, sections, multiple fibers) is modeled beyond those numbers.

#include <string>
#include <vector>

#include "mslope/classes.hpp"
#include "mslope/errors.hpp"
#include "mslope/rational.hpp"

namespace mslope {

// Pairing vector of a one-dimensional family against the divisor basis.
struct CurveClass {
    std::string name;
    Space space = Space::Mg;
    int genus = 0;
    Rational lambda;
    Rational psi; // pointed space only; stays 0 on the unpointed space
    std::vector<Rational> delta;

    CurveClass(std::string name_, Space s, int g)
        : name(std::move(name_)), space(s), genus(g), delta(delta_count(s, g)) {
        validate_genus(g);
    }

    std::string str() const {
        std::string out = name + " on " + space_tag(space) + "(" + std::to_string(genus) + "):";
        bool any = false;
        auto item = [&](const std::string& label, const Rational& v) {
            if (v.is_zero()) return;
            out += (any ? ", " : " ") + label + ":" + v.str();
            any = true;
        };
        item("lambda", lambda);
        if (space == Space::Mg1) item("psi", psi);
        for (size_t i = 0; i < delta.size(); ++i) item("delta" + std::to_string(i), delta[i]);
        if (!any) out += " 0";
        return out;
    }
};

// Pairing of a curve with each basis element, as a Coeff so partial classes
// can reuse the same loop.
namespace detail {
inline Rational curve_pairing(const CurveClass& c, const Basis& b) {
    switch (b.kind) {
    case Basis::Kind::lambda: return c.lambda;
    case Basis::Kind::psi: return c.psi;
    case Basis::Kind::delta: return c.delta[static_cast<size_t>(b.index)];
    }
    throw validation_error("intersect: unreachable basis kind");
}

template <typename ClassT>
Rational intersect_impl(const CurveClass& c, const ClassT& d, Space d_space) {
    if (c.space != d_space)
        throw validation_error("intersect: curve lives on " + space_tag(c.space) + ", class on " + space_tag(d_space));
    if (c.genus != d.genus)
        throw validation_error("intersect: mixed genera (" + std::to_string(c.genus) + " vs " +
                               std::to_string(d.genus) + ")");
    Rational total;
    for (const Basis& b : basis_of(c.space, c.genus)) {
        const Rational p = curve_pairing(c, b);
        const Coeff coeff = Coeff(coefficient(d, b));
        if (coeff.is_unknown()) {
            if (!p.is_zero())
                throw indeterminate_error("intersect: unknown coefficient of " + b.str() + " meets nonzero pairing " +
                                          p.str());
            continue;
        }
        total = total + p * coeff.value();
    }
    return total;
}
} // namespace detail

inline Rational intersect(const CurveClass& c, const DivisorClass& d) {
    return detail::intersect_impl(c, d, Space::Mg);
}
inline Rational intersect(const CurveClass& c, const PointedDivisorClass& d) {
    return detail::intersect_impl(c, d, Space::Mg1);
}
inline Rational intersect(const CurveClass& c, const PartialDivisorClass& d) {
    return detail::intersect_impl(c, d, d.space);
}

// B: a Lefschetz pencil of curves of genus i on a general polarized K3
// surface, viewed as a curve in the genus-i space. Its pairings are
// B.lambda = i+1, B.delta_0 = 6i+18, B.delta_j = 0 for j >= 1, so
// B.delta_0 / B.lambda = 6 + 12/(i+1), the genus-i slope bound.
inline CurveClass lefschetz_pencil(int i) {
    if (i < 2 || i > 11)
        throw validation_error("lefschetz_pencil: genus " + std::to_string(i) + " outside the K3 range 2..11");
    CurveClass c("B_" + std::to_string(i), Space::Mg, i);
    c.lambda = i + 1;
    c.delta[0] = 6 * i + 18;
    return c;
}

// B_i: the genus-i pencil above (or, for i = 1, a pencil of plane cubics)
// glued to a fixed general curve of genus g-i along a moving point of the
// pencil and a fixed point of the complement. Gluing leaves B.lambda and
// B.delta_0 alone and adds a single delta_i pairing of -1 from the moving
// node; for i = 1 the pencil contributes lambda = 1 and delta_0 = 12.
inline CurveClass glued_pencil(int i, int g) {
    if (i < 1 || i > 11)
        throw validation_error("glued_pencil: component genus " + std::to_string(i) + " outside 1..11");
    validate_genus(g);
    if (i > g / 2)
        throw validation_error("glued_pencil: delta_" + std::to_string(i) + " is not a basis class at genus " +
                               std::to_string(g));
    CurveClass c("B_" + std::to_string(i) + "^" + std::to_string(g), Space::Mg, g);
    c.lambda = (i == 1) ? 1 : i + 1;
    c.delta[0] = (i == 1) ? 12 : 6 * i + 18;
    c.delta[static_cast<size_t>(i)] = -1;
    return c;
}

// R: the pointed form of the genus-10 K3 pencil — the same family of curves
// with the moving point that gets glued to the fixed genus-(g-10) tail, viewed
// in the pointed genus-10 space.
//
// Its pairing vector is reconstructed, uniquely, from the identity
//
//   R . j^*(D) = 11a - 78 b_0 + b_10
//
// holding for every D = a lambda - b_0 delta_0 - ... - b_g delta_g on an
// unpointed space of genus >= 20, given the attaching-map pullback formulas
// j^*(lambda) = lambda, j^*(delta_0) = delta_0, j^*(delta_10) = -psi (see
// pull_attach10): matching coefficients of a, b_0, b_10 forces R.lambda = 11,
// R.delta_0 = 78 and R.psi = 1, and the absence of any other b_i from the
// identity forces R.delta_i = 0 for 1 <= i <= 9 (the images of those classes
// under j^* are supported on delta_1..delta_9). Consistently, forgetting the
// point recovers the lefschetz_pencil(10) pairings lambda:11, delta_0:78.
inline CurveClass pointed_k3_pencil() {
    CurveClass c("R", Space::Mg1, 10);
    c.lambda = 11;
    c.delta[0] = 78;
    c.psi = 1;
    return c;
}

} // namespace mslope
