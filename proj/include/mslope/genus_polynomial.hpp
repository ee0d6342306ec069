#pragma once

// Polynomials in the genus variable g with exact rational coefficients.
//
// These are the closed-form coefficient expressions that the calculus produces
// (degree at most 5 in practice); the degree cap of 8 leaves room for the
// products taken in consistency checks while making a runaway symbolic
// computation an error instead of a silent truncation.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "mslope/errors.hpp"
#include "mslope/rational.hpp"

namespace mslope {

class GenusPolynomial {
public:
    static constexpr int max_degree = 8;

    GenusPolynomial() = default; // the zero polynomial

    // Coefficients in ascending order: {c0, c1, ...} represents c0 + c1*g + ...
    GenusPolynomial(std::initializer_list<Rational> ascending)
        : GenusPolynomial(std::vector<Rational>(ascending)) {}

    explicit GenusPolynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) {
        normalize();
        if (degree() > max_degree)
            throw validation_error("genus polynomial: degree cap (" + std::to_string(max_degree) + ") exceeded");
    }

    static GenusPolynomial constant(Rational c) { return GenusPolynomial({std::move(c)}); }
    static GenusPolynomial variable() { return GenusPolynomial({0, 1}); }

    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Rational& coeff(int k) const {
        static const Rational zero;
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(k)] : zero;
    }

    Rational eval(const Rational& g) const {
        Rational acc; // Horner
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + *it;
        return acc;
    }
    Rational eval(long g) const { return eval(Rational(g)); }

    friend GenusPolynomial operator+(const GenusPolynomial& a, const GenusPolynomial& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
        return GenusPolynomial(std::move(c));
    }
    friend GenusPolynomial operator-(const GenusPolynomial& a, const GenusPolynomial& b) {
        return a + (Rational(-1) * b);
    }
    friend GenusPolynomial operator*(const GenusPolynomial& a, const GenusPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.degree() + b.degree() > max_degree)
            throw validation_error("genus polynomial: degree cap (" + std::to_string(max_degree) +
                                   ") exceeded by product of degrees " + std::to_string(a.degree()) + " and " +
                                   std::to_string(b.degree()));
        std::vector<Rational> c(static_cast<size_t>(a.degree() + b.degree()) + 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return GenusPolynomial(std::move(c));
    }
    friend GenusPolynomial operator*(const Rational& s, const GenusPolynomial& p) {
        std::vector<Rational> c(p.c_);
        for (auto& x : c) x *= s;
        return GenusPolynomial(std::move(c));
    }

    friend bool operator==(const GenusPolynomial& a, const GenusPolynomial& b) { return a.c_ == b.c_; }

    // Human-readable form, highest power first: "13*g^3 + 6*g^2 - 9*g + 2".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const Rational& c = coeff(k);
            if (c.is_zero()) continue;
            const bool leading = out.empty();
            const Rational mag = c.sign() < 0 ? -c : c;
            out += leading ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + ");
            const bool unit = (mag == Rational(1)) && k > 0;
            if (!unit) out += mag.str();
            if (k >= 1) out += unit ? "g" : "*g";
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_; // ascending powers; empty = zero polynomial
};

// Certifies that the closed form `p` agrees with the genus-indexed quantity
// `f` on every sample. Demands at least degree_bound + 1 distinct samples, so
// agreement pins the polynomial of that degree uniquely rather than just
// spot-checking it.
inline bool poly_identity_check(const GenusPolynomial& p, const std::function<Rational(long)>& f, int degree_bound,
                                const std::vector<long>& sample_genera) {
    const std::set<long> distinct(sample_genera.begin(), sample_genera.end());
    if (static_cast<int>(distinct.size()) < degree_bound + 1)
        throw validation_error("poly identity check: need at least " + std::to_string(degree_bound + 1) +
                               " distinct samples, got " + std::to_string(distinct.size()));
    for (long g : distinct)
        if (p.eval(g) != f(g)) return false;
    return true;
}

} // namespace mslope
