#pragma once

// Arbitrary-precision rationals, kept in canonical form (reduced, positive
// denominator).  Backed by Boost.Multiprecision; the helpers below add the
// pieces the exact layer needs: safe construction, decimal-string parsing,
// canonical printing, and exact square detection.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "ecfan/errors.hpp"

namespace ecfan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational refuses negative denominators instead of normalising them.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline BigInt num(const Rational& q) { return numerator(q); }
inline BigInt den(const Rational& q) { return denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

// Floor integer square root; exact flag reports whether n is a perfect square.
inline BigInt floor_isqrt(const BigInt& n, bool& exact) {
    BigInt r = boost::multiprecision::sqrt(n);
    exact = (r * r == n);
    return r;
}

// q = s^2 for rational s >= 0?  Since q is canonical, this holds iff both
// numerator and denominator are perfect squares.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    bool exact_n = false, exact_d = false;
    BigInt rn = floor_isqrt(numerator(q), exact_n);
    if (!exact_n) return std::nullopt;
    BigInt rd = floor_isqrt(denominator(q), exact_d);
    if (!exact_d) return std::nullopt;
    return make_rational(rn, rd);
}

// "p" or "p/q"; arbitrary precision; whitespace already stripped by callers.
Rational parse_rational(const std::string& text);

// Canonical text: "p" when q == 1, else "p/q".  parse(format(x)) == x.
std::string format_rational(const Rational& q);

}  // namespace ecfan
