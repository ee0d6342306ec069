#pragma once

// Divisor classes on the moduli space of stable genus-g curves and on its
// pointed (universal-curve) counterpart.
//
// Basis and sign conventions:
//   unpointed space (genus g >= 2):  lambda, delta0, ..., delta_{floor(g/2)}
//   pointed space   (genus g >= 2):  lambda, psi, delta0, ..., delta_{g-1}
//
// A class is stored by its coefficients in this basis. A divisor usually
// written D = a*lambda - sum b_i*delta_i is therefore stored with
// delta[i] = -b_i; the (a, b_i) reading is recovered only where a statement is
// actually about the b_i (the slope function and the theorem-layer reports).
// Keeping a single signed convention in the engine removes the per-term sign
// flips that make this calculus error-prone.
//
// PartialDivisorClass adds an Unknown marker for coefficients the sources
// leave undetermined. Unknown is not zero: it absorbs in linear combinations
// (u + x = u, c*u = u for c != 0, 0*u = 0), and any operation that needs such
// a coefficient exactly fails with indeterminate_error.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mslope/errors.hpp"
#include "mslope/rational.hpp"

namespace mslope {

enum class Space { Mg, Mg1 }; // unpointed / pointed moduli space

inline std::string space_tag(Space s) { return s == Space::Mg ? "Mg" : "Mg1"; }

inline void validate_genus(int genus) {
    if (genus < 2) throw validation_error("class: genus must be at least 2, got " + std::to_string(genus));
}

// Number of boundary classes delta_0..delta_{max} carried by a class.
inline int delta_count(Space space, int genus) {
    validate_genus(genus);
    return space == Space::Mg ? genus / 2 + 1 : genus;
}

// One basis element of the Picard group (tensored with Q) of either space.
struct Basis {
    enum class Kind { lambda, psi, delta };

    Kind kind = Kind::lambda;
    int index = 0; // meaningful for delta only

    static Basis lambda() { return {Kind::lambda, 0}; }
    static Basis psi() { return {Kind::psi, 0}; }
    static Basis delta(int i) {
        if (i < 0) throw validation_error("basis: negative delta index");
        return {Kind::delta, i};
    }

    bool is_delta() const { return kind == Kind::delta; }

    std::string str() const {
        switch (kind) {
            case Kind::lambda: return "lambda";
            case Kind::psi: return "psi";
            default: return "delta" + std::to_string(index);
        }
    }

    friend bool operator==(const Basis&, const Basis&) = default;
};

// Enumerates the basis of Pic for the given space and genus, lambda first.
inline std::vector<Basis> basis_of(Space space, int genus) {
    std::vector<Basis> out;
    out.push_back(Basis::lambda());
    if (space == Space::Mg1) out.push_back(Basis::psi());
    for (int i = 0; i < delta_count(space, genus); ++i) out.push_back(Basis::delta(i));
    return out;
}

inline void validate_basis(Space space, int genus, const Basis& b) {
    if (b.kind == Basis::Kind::psi && space == Space::Mg)
        throw validation_error("class: psi is not a basis element of the unpointed space");
    if (b.kind == Basis::Kind::delta && b.index >= delta_count(space, genus))
        throw validation_error("class: delta" + std::to_string(b.index) + " is not a basis element (genus " +
                               std::to_string(genus) + ", " + space_tag(space) + ")");
}

// An exact rational coefficient or the Unknown marker.
class Coeff {
public:
    Coeff() : v_(Rational(0)) {}
    Coeff(Rational v) : v_(std::move(v)) {} // NOLINT: implicit on purpose
    Coeff(long v) : v_(Rational(v)) {}      // NOLINT
    Coeff(int v) : v_(Rational(v)) {}       // NOLINT

    static Coeff unknown() { return Coeff(unknown_tag{}); }

    bool is_unknown() const { return !v_.has_value(); }
    bool is_zero() const { return v_.has_value() && v_->is_zero(); }

    const Rational& value() const {
        if (!v_) throw indeterminate_error("coefficient is unknown");
        return *v_;
    }

    Coeff& operator+=(const Coeff& o) {
        if (!v_ || !o.v_) v_.reset();
        else *v_ += *o.v_;
        return *this;
    }
    friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }

    // Scaling: 0 * unknown = 0 (the term is absent), c * unknown = unknown.
    friend Coeff operator*(const Rational& c, const Coeff& a) {
        if (c.is_zero()) return Coeff(Rational(0));
        if (a.is_unknown()) return unknown();
        return Coeff(c * a.value());
    }

    friend bool operator==(const Coeff& a, const Coeff& b) {
        if (a.is_unknown() || b.is_unknown()) return a.is_unknown() && b.is_unknown();
        return a.value() == b.value();
    }

    std::string str() const { return v_ ? v_->str() : "unknown"; }

private:
    struct unknown_tag {};
    explicit Coeff(unknown_tag) : v_(std::nullopt) {}

    std::optional<Rational> v_;
};

namespace detail {

// Shared rendering: "7*lambda - delta0 - 5*delta1" plus an unknown-slot note.
template <typename GetCoeff>
std::string render_class(Space space, int genus, GetCoeff get) {
    std::string out;
    std::vector<std::string> unknown_slots;
    for (const Basis& b : basis_of(space, genus)) {
        const Coeff c = get(b);
        if (c.is_unknown()) {
            unknown_slots.push_back(b.str());
            continue;
        }
        if (c.is_zero()) continue;
        const Rational& v = c.value();
        const Rational mag = v.sign() < 0 ? -v : v;
        out += out.empty() ? (v.sign() < 0 ? "-" : "") : (v.sign() < 0 ? " - " : " + ");
        if (mag == Rational(1)) out += b.str();
        else out += mag.str() + "*" + b.str();
    }
    if (out.empty()) out = "0";
    if (!unknown_slots.empty()) {
        out += " (";
        for (size_t i = 0; i < unknown_slots.size(); ++i) out += (i ? ", " : "") + unknown_slots[i];
        out += " unknown)";
    }
    return out;
}

} // namespace detail

// A fully known divisor class on the unpointed space.
struct DivisorClass {
    int genus;
    Rational lambda;
    std::vector<Rational> delta; // index i = coefficient of delta_i, 0 <= i <= g/2

    explicit DivisorClass(int g) : genus(g), delta(static_cast<size_t>(delta_count(Space::Mg, g))) {}

    std::string str() const {
        return detail::render_class(Space::Mg, genus, [&](const Basis& b) {
            return Coeff(b.is_delta() ? delta[static_cast<size_t>(b.index)] : lambda);
        });
    }

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

// A fully known divisor class on the pointed space.
struct PointedDivisorClass {
    int genus;
    Rational lambda;
    Rational psi;
    std::vector<Rational> delta; // index i = coefficient of delta_i, 0 <= i <= g-1

    explicit PointedDivisorClass(int g) : genus(g), delta(static_cast<size_t>(delta_count(Space::Mg1, g))) {}

    std::string str() const {
        return detail::render_class(Space::Mg1, genus, [&](const Basis& b) {
            if (b.is_delta()) return Coeff(delta[static_cast<size_t>(b.index)]);
            return Coeff(b.kind == Basis::Kind::psi ? psi : lambda);
        });
    }

    friend bool operator==(const PointedDivisorClass&, const PointedDivisorClass&) = default;
};

// A divisor class on either space whose coefficients may be Unknown.
struct PartialDivisorClass {
    Space space;
    int genus;
    Coeff lambda;
    Coeff psi; // must stay exactly zero on the unpointed space
    std::vector<Coeff> delta;

    PartialDivisorClass(Space s, int g)
        : space(s), genus(g), delta(static_cast<size_t>(delta_count(s, g))) {}

    static PartialDivisorClass from(const DivisorClass& d) {
        PartialDivisorClass p(Space::Mg, d.genus);
        p.lambda = d.lambda;
        for (size_t i = 0; i < d.delta.size(); ++i) p.delta[i] = d.delta[i];
        return p;
    }

    static PartialDivisorClass from(const PointedDivisorClass& d) {
        PartialDivisorClass p(Space::Mg1, d.genus);
        p.lambda = d.lambda;
        p.psi = d.psi;
        for (size_t i = 0; i < d.delta.size(); ++i) p.delta[i] = d.delta[i];
        return p;
    }

    bool is_full() const {
        if (lambda.is_unknown() || psi.is_unknown()) return false;
        for (const Coeff& c : delta)
            if (c.is_unknown()) return false;
        return true;
    }

    // Conversions to the fully known types; throw if any slot is Unknown.
    DivisorClass to_unpointed() const {
        if (space != Space::Mg) throw validation_error("class: not a class on the unpointed space");
        DivisorClass d(genus);
        d.lambda = lambda.value();
        for (size_t i = 0; i < delta.size(); ++i) d.delta[i] = delta[i].value();
        return d;
    }

    PointedDivisorClass to_pointed() const {
        if (space != Space::Mg1) throw validation_error("class: not a class on the pointed space");
        PointedDivisorClass d(genus);
        d.lambda = lambda.value();
        d.psi = psi.value();
        for (size_t i = 0; i < delta.size(); ++i) d.delta[i] = delta[i].value();
        return d;
    }

    std::string str() const {
        return detail::render_class(space, genus, [&](const Basis& b) {
            if (b.is_delta()) return delta[static_cast<size_t>(b.index)];
            return b.kind == Basis::Kind::psi ? psi : lambda;
        });
    }

    friend bool operator==(const PartialDivisorClass&, const PartialDivisorClass&) = default;
};

// --- validated sparse constructors -----------------------------------------

inline DivisorClass make_unpointed(int genus, const std::vector<std::pair<Basis, Rational>>& coeffs) {
    DivisorClass d(genus);
    for (const auto& [b, v] : coeffs) {
        validate_basis(Space::Mg, genus, b);
        if (b.is_delta()) d.delta[static_cast<size_t>(b.index)] += v;
        else d.lambda += v;
    }
    return d;
}

inline PointedDivisorClass make_pointed(int genus, const std::vector<std::pair<Basis, Rational>>& coeffs) {
    PointedDivisorClass d(genus);
    for (const auto& [b, v] : coeffs) {
        validate_basis(Space::Mg1, genus, b);
        if (b.is_delta()) d.delta[static_cast<size_t>(b.index)] += v;
        else if (b.kind == Basis::Kind::psi) d.psi += v;
        else d.lambda += v;
    }
    return d;
}

// General constructor: entries absent from the list are exactly zero.
inline PartialDivisorClass make_partial(Space space, int genus, const std::vector<std::pair<Basis, Coeff>>& coeffs) {
    PartialDivisorClass d(space, genus);
    for (const auto& [b, v] : coeffs) {
        validate_basis(space, genus, b);
        if (b.is_delta()) d.delta[static_cast<size_t>(b.index)] += v;
        else if (b.kind == Basis::Kind::psi) d.psi += v;
        else d.lambda += v;
    }
    return d;
}

// --- coefficient access ------------------------------------------------------

inline Rational coefficient(const DivisorClass& d, const Basis& b) {
    validate_basis(Space::Mg, d.genus, b);
    return b.is_delta() ? d.delta[static_cast<size_t>(b.index)] : d.lambda;
}

inline Rational coefficient(const PointedDivisorClass& d, const Basis& b) {
    validate_basis(Space::Mg1, d.genus, b);
    if (b.is_delta()) return d.delta[static_cast<size_t>(b.index)];
    return b.kind == Basis::Kind::psi ? d.psi : d.lambda;
}

inline Coeff coefficient(const PartialDivisorClass& d, const Basis& b) {
    validate_basis(d.space, d.genus, b);
    if (b.is_delta()) return d.delta[static_cast<size_t>(b.index)];
    return b.kind == Basis::Kind::psi ? d.psi : d.lambda;
}

// --- linear combinations ------------------------------------------------------

namespace detail {
inline void require_same(int ga, int gb, const char* what) {
    if (ga != gb)
        throw validation_error(std::string("linear combination: mixed ") + what + " (" + std::to_string(ga) + " vs " +
                               std::to_string(gb) + ")");
}
} // namespace detail

inline DivisorClass linear_combine(const std::vector<std::pair<Rational, DivisorClass>>& terms) {
    if (terms.empty()) throw validation_error("linear combination: no terms");
    DivisorClass out(terms.front().second.genus);
    for (const auto& [c, d] : terms) {
        detail::require_same(out.genus, d.genus, "genera");
        out.lambda += c * d.lambda;
        for (size_t i = 0; i < out.delta.size(); ++i) out.delta[i] += c * d.delta[i];
    }
    return out;
}

inline PointedDivisorClass linear_combine(const std::vector<std::pair<Rational, PointedDivisorClass>>& terms) {
    if (terms.empty()) throw validation_error("linear combination: no terms");
    PointedDivisorClass out(terms.front().second.genus);
    for (const auto& [c, d] : terms) {
        detail::require_same(out.genus, d.genus, "genera");
        out.lambda += c * d.lambda;
        out.psi += c * d.psi;
        for (size_t i = 0; i < out.delta.size(); ++i) out.delta[i] += c * d.delta[i];
    }
    return out;
}

inline PartialDivisorClass linear_combine(const std::vector<std::pair<Rational, PartialDivisorClass>>& terms) {
    if (terms.empty()) throw validation_error("linear combination: no terms");
    PartialDivisorClass out(terms.front().second.space, terms.front().second.genus);
    for (const auto& [c, d] : terms) {
        detail::require_same(out.genus, d.genus, "genera");
        if (out.space != d.space) throw validation_error("linear combination: mixed spaces");
        out.lambda += c * d.lambda;
        out.psi += c * d.psi;
        for (size_t i = 0; i < out.delta.size(); ++i) out.delta[i] += c * d.delta[i];
    }
    return out;
}

inline DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) { return linear_combine({{1, a}, {1, b}}); }
inline DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return linear_combine({{1, a}, {-1, b}}); }
inline DivisorClass operator*(const Rational& c, const DivisorClass& d) { return linear_combine({{c, d}}); }

inline PointedDivisorClass operator+(const PointedDivisorClass& a, const PointedDivisorClass& b) {
    return linear_combine({{1, a}, {1, b}});
}
inline PointedDivisorClass operator-(const PointedDivisorClass& a, const PointedDivisorClass& b) {
    return linear_combine({{1, a}, {-1, b}});
}
inline PointedDivisorClass operator*(const Rational& c, const PointedDivisorClass& d) { return linear_combine({{c, d}}); }

inline PartialDivisorClass operator+(const PartialDivisorClass& a, const PartialDivisorClass& b) {
    return linear_combine({{1, a}, {1, b}});
}
inline PartialDivisorClass operator-(const PartialDivisorClass& a, const PartialDivisorClass& b) {
    return linear_combine({{1, a}, {-1, b}});
}
inline PartialDivisorClass operator*(const Rational& c, const PartialDivisorClass& d) { return linear_combine({{c, d}}); }

// --- slope ---------------------------------------------------------------------

// The slope of a divisor class, a nonnegative rational or +infinity in the
// classical setting; see `slope` below for the exact convention used here.
class Slope {
public:
    Slope(Rational v) : v_(std::move(v)) {} // NOLINT: implicit on purpose
    static Slope infinite() { return Slope(); }

    bool is_infinite() const { return !v_.has_value(); }
    const Rational& value() const {
        if (!v_) throw validation_error("slope: infinite");
        return *v_;
    }

    std::string str() const { return v_ ? v_->str() : "infinity"; }

    friend bool operator==(const Slope& a, const Slope& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
        return a.value() == b.value();
    }

private:
    Slope() = default;
    std::optional<Rational> v_;
};

// s(D) for D = a*lambda - sum b_i*delta_i (i.e. b_i = -delta[i]):
//   - infinity if any b_i < 0 (a positive stored delta coefficient), or if
//     min_i b_i = 0 (in particular for the zero class);
//   - otherwise a / min_i b_i.
// With a < 0 and every b_i > 0 this returns the negative value a / min b_i
// rather than infinity; that choice keeps slope(c*D) = slope(D) for c > 0 and
// preserves monotonicity in reports.
inline Slope slope(const DivisorClass& d) {
    Rational min_b = -d.delta.at(0);
    for (const Rational& x : d.delta) {
        const Rational b = -x;
        if (b < min_b) min_b = b;
    }
    if (min_b <= Rational(0)) return Slope::infinite();
    return Slope(d.lambda / min_b);
}

// A partial class with no Unknown slots is just a full class; otherwise the
// minimum over the b_i is not determined and the slope is indeterminate (the
// theorem layer's slope certificate is the tool for that situation).
inline Slope slope(const PartialDivisorClass& d) {
    if (d.space != Space::Mg) throw validation_error("slope: defined for classes on the unpointed space");
    if (!d.is_full())
        throw indeterminate_error("slope: class has unknown boundary coefficients; use the slope certificate");
    return slope(d.to_unpointed());
}

} // namespace mslope
