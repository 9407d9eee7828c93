#pragma once

// Uniform scalar interface for the templated core.  Everything downstream is
// written once against these free functions and instantiated for
//   double   — floating evaluation (scans, root finding), and
//   QuadExt  — exact evaluation in Q(sqrt2) (certification).
// Mixing modes is a type error, so it cannot happen past the input layer.

#include <cmath>
#include <optional>

#include "ecfan/quadext.hpp"

namespace ecfan {

inline int sign(double x) { return (x > 0.0) - (x < 0.0); }
inline double to_double(double x) { return x; }

// sqrt for nonnegative arguments.  In the exact field the root exists only
// for rational radicands of the form s^2 or 2 s^2; nullopt otherwise.
inline std::optional<double> field_sqrt(double x) { return std::sqrt(x); }
inline std::optional<QuadExt> field_sqrt(const QuadExt& x) {
    if (!x.is_rational()) return std::nullopt;
    return sqrt_exact(x.rational_part());
}

// Is the scalar a (small) nonnegative integer?  Used for exponents.
inline bool integer_value(double x, long long& out) {
    if (!(std::floor(x) == x) || std::abs(x) > 1e15) return false;
    out = static_cast<long long>(x);
    return true;
}
inline bool integer_value(const QuadExt& x, long long& out) {
    if (!x.is_rational() || den(x.rational_part()) != 1) return false;
    const BigInt& n = numerator(x.rational_part());
    if (n > 1000000 || n < -1000000) return false;
    out = n.convert_to<long long>();
    return true;
}

template <class S>
inline constexpr bool kExactScalar = false;
template <>
inline constexpr bool kExactScalar<QuadExt> = true;

template <class S>
const char* scalar_mode_name() {
    return kExactScalar<S> ? "exact" : "floating";
}

}  // namespace ecfan
