#pragma once

// Pushforward and pullback calculus between the pointed and unpointed spaces,
// for the forgetful projection pi : (pointed, genus g) -> (unpointed, genus g).
//
// The degree-2 pushforward acts on products of two divisor classes on the
// pointed space and lands in divisor classes on the unpointed space. It is
// bilinear, so it is determined by its values on basis pairs:
//
//   pi_*(lambda^2)            = 0
//   pi_*(lambda.psi)          = (2g-2) lambda
//   pi_*(lambda.delta_i)      = 0                      for every i
//   pi_*(psi^2)               = 12 lambda - delta      (delta = delta_0 + ... + delta_{floor(g/2)})
//   pi_*(psi.delta_0)         = (2g-2) delta_0
//   pi_*(psi.delta_i)         = (2i-1) delta_i         for i >= 1
//   pi_*(delta_0.delta_i)     = 0                      for every i (including delta_0^2)
//   pi_*(delta_i^2)           = -delta_i               for 1 <= i <= g-1
//   pi_*(delta_i.delta_{g-i}) = delta_i                for 1 <= i < g/2
//   pi_*(delta_i.delta_j)     = 0                      otherwise (i != j, j != g-i)
//
// Every delta index on the right-hand side is a class on the unpointed space
// and is canonicalized to min(i, g-i).
//
// The formulas cross-check each other through the projection formula: for a
// split index pair, (2i-1) + (2(g-i)-1) = 2g-2 = deg(omega_pi), and the
// degree-2 vanishing pi_*(pi^*A . pi^*B) = 0 holds for all basis pairs except
// the even-genus middle self-pair A = B = delta_{g/2}, where the table's
// delta_{g/2}^2 |-> -delta_{g/2} entry (which the closed-form coefficients of
// pushed squares require) makes the vanishing unachievable under any constant
// pullback convention. See pull_forgetful below for the middle-index choice.

#include <string>
#include <utility>
#include <vector>

#include "mslope/classes.hpp"
#include "mslope/errors.hpp"
#include "mslope/rational.hpp"

namespace mslope {

// The unpointed-space index a pointed delta_i pushes to.
inline int mirror_index(int genus, int i) { return i <= genus - i ? i : genus - i; }

// The basis-pair rule table for one genus. Immutable; built on demand.
class PushRuleTable {
public:
    explicit PushRuleTable(int genus) : genus_(genus) { validate_genus(genus); }

    int genus() const { return genus_; }

    // pi_*(x.y) for basis elements x, y of the pointed space; symmetric in (x, y).
    DivisorClass rule(const Basis& x, const Basis& y) const {
        validate_basis(Space::Mg1, genus_, x);
        validate_basis(Space::Mg1, genus_, y);

        DivisorClass out(genus_);
        const int g = genus_;
        using K = Basis::Kind;

        // Normalize the unordered pair: lambda < psi < delta, deltas by index.
        const Basis* a = &x;
        const Basis* b = &y;
        auto rank = [](const Basis& e) { return e.kind == K::lambda ? 0 : e.kind == K::psi ? 1 : 2 + e.index; };
        if (rank(*a) > rank(*b)) std::swap(a, b);

        if (a->kind == K::lambda) {
            if (b->kind == K::psi) out.lambda = 2 * g - 2; // lambda.psi
            return out;                                    // lambda^2 and lambda.delta_i vanish
        }
        if (a->kind == K::psi) {
            if (b->kind == K::psi) { // psi^2 = 12 lambda - total boundary
                out.lambda = 12;
                for (auto& c : out.delta) c = -1;
                return out;
            }
            const int i = b->index; // psi.delta_i
            out.delta[static_cast<size_t>(mirror_index(g, i))] = (i == 0) ? Rational(2 * g - 2) : Rational(2 * i - 1);
            return out;
        }
        // Both are boundary classes.
        const int i = a->index;
        const int j = b->index;
        if (i == 0 || j == 0) return out;                                       // delta_0.delta_anything = 0
        if (i == j) out.delta[static_cast<size_t>(mirror_index(g, i))] = -1;    // delta_i^2
        else if (i + j == g) out.delta[static_cast<size_t>(mirror_index(g, i))] = 1; // complementary pair, i < g/2
        return out;                                                             // all other pairs vanish
    }

private:
    int genus_;
};

namespace detail {
inline void require_pointed_pair(int gx, int gy) {
    if (gx != gy)
        throw validation_error("pushforward: mixed genera (" + std::to_string(gx) + " vs " + std::to_string(gy) + ")");
}
} // namespace detail

// pi_*(X.Y) for fully known classes X, Y on the pointed space.
inline DivisorClass push_quadratic(const PointedDivisorClass& x, const PointedDivisorClass& y) {
    detail::require_pointed_pair(x.genus, y.genus);
    const PushRuleTable table(x.genus);
    DivisorClass out(x.genus);
    const auto bs = basis_of(Space::Mg1, x.genus);
    for (const Basis& bx : bs) {
        const Rational cx = coefficient(x, bx);
        if (cx.is_zero()) continue;
        for (const Basis& by : bs) {
            const Rational cy = coefficient(y, by);
            if (cy.is_zero()) continue;
            out = out + (cx * cy) * table.rule(bx, by);
        }
    }
    return out;
}

// pi_*(X.Y) where Y may carry Unknown coefficients.
//
// A term with an Unknown coefficient of Y contaminates exactly the output
// slots its rule class touches; every other slot accumulates exactly. The
// lambda and delta_0 output slots are required to come out exact — they are
// what the theorem layer consumes — so an Unknown contribution reaching either
// one is an error rather than a silent Unknown. (When the Unknown slots of Y
// are confined to delta_i with i >= 1, no rule above can reach lambda or
// delta_0 from them, so those outputs are always exact in that situation.)
inline PartialDivisorClass push_quadratic_partial(const PointedDivisorClass& x, const PartialDivisorClass& y) {
    if (y.space != Space::Mg1) throw validation_error("pushforward: second factor must live on the pointed space");
    detail::require_pointed_pair(x.genus, y.genus);
    const PushRuleTable table(x.genus);
    PartialDivisorClass out(Space::Mg, x.genus);
    const auto bs = basis_of(Space::Mg1, x.genus);
    for (const Basis& bx : bs) {
        const Rational cx = coefficient(x, bx);
        if (cx.is_zero()) continue;
        for (const Basis& by : bs) {
            const Coeff cy = coefficient(y, by);
            if (cy.is_zero()) continue;
            const DivisorClass r = table.rule(bx, by);
            if (cy.is_unknown()) {
                if (!r.lambda.is_zero()) out.lambda = Coeff::unknown();
                for (size_t i = 0; i < r.delta.size(); ++i)
                    if (!r.delta[i].is_zero()) out.delta[i] = Coeff::unknown();
            } else {
                const Rational w = cx * cy.value();
                out.lambda += Coeff(w * r.lambda);
                for (size_t i = 0; i < r.delta.size(); ++i) out.delta[i] += Coeff(w * r.delta[i]);
            }
        }
    }
    if (out.lambda.is_unknown() || out.delta[0].is_unknown())
        throw indeterminate_error(
            "pushforward: an unknown coefficient of the second factor feeds the lambda or delta0 output");
    return out;
}

// pi^*: pullback of a divisor class along the forgetful projection.
//
//   lambda  -> lambda,   delta_0 -> delta_0,   psi-coefficient 0,
//   delta_i -> delta_i + delta_{g-i}    for 1 <= i < g/2,
//   delta_{g/2} -> 2 delta_{g/2}        for even g.
//
// The middle-index multiplier is a convention (the boundary divisor in the
// middle case is swept once but carries the point on either of the two
// genus-g/2 halves); the value 2 is the unique choice consistent with the
// projection formula pi_*(pi^*A.psi) = (2g-2)A under the rule table above,
// since pi_*(psi.delta_{g/2}) = (g-1) delta_{g/2}.
inline PointedDivisorClass pull_forgetful(const DivisorClass& a) {
    PointedDivisorClass out(a.genus);
    out.lambda = a.lambda;
    out.delta[0] = a.delta[0];
    const int g = a.genus;
    for (int i = 1; i <= g / 2; ++i) {
        const Rational& c = a.delta[static_cast<size_t>(i)];
        if (2 * i == g) {
            out.delta[static_cast<size_t>(i)] = 2 * c;
        } else {
            out.delta[static_cast<size_t>(i)] = c;
            out.delta[static_cast<size_t>(g - i)] = c;
        }
    }
    return out;
}

// Pullback of a partially known class: the same index map, with Unknown
// coefficients carried through to every slot they land on.
inline PartialDivisorClass pull_forgetful(const PartialDivisorClass& a) {
    if (a.space != Space::Mg) throw validation_error("pullback: argument must live on the unpointed space");
    PartialDivisorClass out(Space::Mg1, a.genus);
    out.lambda = a.lambda;
    out.psi = Coeff(Rational(0));
    out.delta[0] = a.delta[0];
    const int g = a.genus;
    for (int i = 1; i <= g / 2; ++i) {
        const Coeff& c = a.delta[static_cast<size_t>(i)];
        if (2 * i == g) {
            out.delta[static_cast<size_t>(i)] = Rational(2) * c;
        } else {
            out.delta[static_cast<size_t>(i)] = c;
            out.delta[static_cast<size_t>(g - i)] = c;
        }
    }
    return out;
}

// j^*: pullback along the attaching map j : (pointed, genus 10) -> (unpointed,
// genus g >= 20) that glues a fixed general pointed curve of genus g-10 to the
// moving genus-10 pointed curve.
//
//   j^*(lambda) = lambda,   j^*(delta_0) = delta_0,   j^*(delta_10) = -psi,
//
// so for D = a lambda - b_0 delta_0 - ... the pullback has lambda = a,
// delta_0 = -b_0 and psi = +b_10. The images of the remaining boundary classes
// are combinations of delta_1..delta_9 on the pointed genus-10 space that are
// not needed downstream; those slots are returned Unknown.
inline PartialDivisorClass pull_attach10(const DivisorClass& d) {
    if (d.genus < 20)
        throw validation_error("attaching-map pullback: needs genus >= 20, got " + std::to_string(d.genus));
    PartialDivisorClass out(Space::Mg1, 10);
    out.lambda = d.lambda;
    out.delta[0] = d.delta[0];
    out.psi = -d.delta[10];
    for (int i = 1; i <= 9; ++i) out.delta[static_cast<size_t>(i)] = Coeff::unknown();
    return out;
}

} // namespace mslope
