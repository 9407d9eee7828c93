#pragma once

// Exact arithmetic in the quadratic field Q(sqrt2), the smallest field that
// holds every number appearing in the reference shock-pair certificate
// (densities and wedge data are rational, interface speeds and transverse
// momenta are rational multiples of sqrt2).
//
// A value is a + b*sqrt2 with a, b rational.  The representation is unique
// because sqrt2 is irrational, so equality is component-wise and the ring
// operations stay exact.  Division uses the conjugate: the norm a^2 - 2 b^2
// vanishes only at zero.

#include <optional>
#include <string>

#include "ecfan/rational.hpp"

namespace ecfan {

class QuadExt {
  public:
    QuadExt() : a_(0), b_(0) {}
    QuadExt(int v) : a_(v), b_(0) {}                      // NOLINT: implicit by design
    QuadExt(long long v) : a_(v), b_(0) {}                // NOLINT
    QuadExt(Rational rational_part) : a_(std::move(rational_part)), b_(0) {}  // NOLINT
    QuadExt(Rational rational_part, Rational sqrt2_coeff)
        : a_(std::move(rational_part)), b_(std::move(sqrt2_coeff)) {}

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_coeff() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    friend QuadExt operator-(const QuadExt& x) { return QuadExt(-x.a_, -x.b_); }
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        // (a + b s)(c + d s) = ac + 2bd + (ad + bc) s,  s^2 = 2
        return QuadExt(x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw DivisionByZero("division by zero in Q(sqrt2)");
        Rational n = y.a_ * y.a_ - 2 * y.b_ * y.b_;  // field norm, nonzero for y != 0
        QuadExt conj(y.a_, -y.b_);
        QuadExt prod = x * conj;
        return QuadExt(prod.a_ / n, prod.b_ / n);
    }

    QuadExt& operator+=(const QuadExt& y) { return *this = *this + y; }
    QuadExt& operator-=(const QuadExt& y) { return *this = *this - y; }
    QuadExt& operator*=(const QuadExt& y) { return *this = *this * y; }
    QuadExt& operator/=(const QuadExt& y) { return *this = *this / y; }

  private:
    Rational a_, b_;
};

// Exact sign (-1, 0, +1) without floating arithmetic.  Mixed-sign components
// reduce to comparing a^2 against 2 b^2 over the integers.
int sign(const QuadExt& x);

inline bool operator<(const QuadExt& x, const QuadExt& y) { return sign(x - y) < 0; }
inline bool operator>(const QuadExt& x, const QuadExt& y) { return sign(x - y) > 0; }
inline bool operator<=(const QuadExt& x, const QuadExt& y) { return sign(x - y) <= 0; }
inline bool operator>=(const QuadExt& x, const QuadExt& y) { return sign(x - y) >= 0; }

// Exact square root of a nonnegative rational, when it exists in Q(sqrt2):
// q = s^2 gives s, q = 2 s^2 gives s*sqrt2 (s >= 0; the two cases exclude
// each other).  Returns nullopt when q is of neither form.  Throws
// NegativeRadicand for q < 0.
std::optional<QuadExt> sqrt_exact(const Rational& q);

// Nearest-double conversion.  Evaluated in 100-digit binary floats; when the
// two terms have opposite signs the value is computed as
// (a^2 - 2 b^2) / (a - b*sqrt2) so catastrophic cancellation never occurs.
// Error is bounded by 4 ulp for component magnitudes below 2^500 (measured
// ~1 ulp).  Throws Overflow when the value leaves double range.
double to_double(const QuadExt& x);

// Text encoding: "p/q", "r/s*sqrt2", or "p/q+r/s*sqrt2" (also with '-');
// integer shorthand ("2", "sqrt2", "-sqrt2") accepted, whitespace ignored.
// parse_quadext(format_quadext(x)) == x exactly.
QuadExt parse_quadext(const std::string& text);
std::string format_quadext(const QuadExt& x);

}  // namespace ecfan
