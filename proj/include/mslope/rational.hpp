#pragma once

// Exact rational arithmetic.
//
// Rational wraps GMP's mpq_class and keeps every value in canonical form:
// denominator > 0 and gcd(|numerator|, denominator) = 1. All comparisons and
// arithmetic are exact; there is no floating point anywhere in this library.
// Decimal strings exist only as display renderings with an explicit number of
// places (digits beyond the last requested place are dropped, i.e. the value
// is truncated toward zero), and are never read back into computations.

#include <compare>
#include <cstdlib>
#include <ostream>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "mslope/errors.hpp"

namespace mslope {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit on purpose, enables 12*b0 - a
    Rational(int n) : v_(static_cast<long>(n)) {}

    Rational(long num, long den) {
        if (den == 0) throw validation_error("rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw validation_error("rational: zero denominator");
        v_ = mpq_class(std::move(num), std::move(den));
        v_.canonicalize();
    }

    // Parses "p", "p/q", or "-p/q" (base 10). Anything else is rejected.
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        const std::string num_part = text.substr(0, slash);
        try {
            mpz_class num(num_part, 10);
            if (slash == std::string::npos) return from_mpq(mpq_class(num));
            mpz_class den(text.substr(slash + 1), 10);
            return Rational(std::move(num), std::move(den));
        } catch (const std::invalid_argument&) {
            throw validation_error("rational: cannot parse '" + text + "'");
        }
    }

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        r.v_.canonicalize();
        return r;
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return from_mpq(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw validation_error("rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Exact serialized form: "p/q", or just "p" for integers; sign on the numerator.
    std::string str() const { return v_.get_str(); }

    // Display-only decimal rendering with exactly `places` digits after the
    // point (none for places = 0); truncates toward zero.
    std::string decimal(int places) const {
        if (places < 0 || places > 60) throw validation_error("rational: decimal places out of range");
        mpz_class num = v_.get_num();
        const bool negative = num < 0;
        if (negative) num = -num;
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
        mpz_class scaled = num * scale / v_.get_den(); // floor on non-negatives = truncation
        std::string digits = scaled.get_str();
        std::string out;
        if (places == 0) {
            out = digits;
        } else {
            if (digits.size() <= static_cast<size_t>(places))
                digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
            out = digits.substr(0, digits.size() - places) + "." + digits.substr(digits.size() - places);
        }
        return (negative && scaled != 0) ? "-" + out : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

} // namespace mslope
