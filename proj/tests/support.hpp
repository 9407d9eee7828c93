#pragma once

// Shared reference scenario for the test suite: the density-jump data
// (rho=1, v=(0, 2 sqrt2)) / (rho=4, v=0) under p(rho) = rho^2, and the fan
// candidate that certifies it.
#include <cstdlib>
#include <string>

#include "ecfan/euler.hpp"
#include "ecfan/quadext.hpp"
#include "ecfan/scalar.hpp"

namespace ecfan::testsupport {

template <class S>
PressureLaw<S> ref_law() {
    return {S(1), S(2)};
}

template <class S>
RiemannData<S> ref_data();

template <>
inline RiemannData<QuadExt> ref_data<QuadExt>() {
    return {EulerState<QuadExt>{QuadExt(1), QuadExt(0), QuadExt(Rational(0), Rational(2))},
            EulerState<QuadExt>{QuadExt(4), QuadExt(0), QuadExt(0)}};
}

template <>
inline RiemannData<double> ref_data<double>() {
    return {EulerState<double>{1.0, 0.0, 2.0 * std::sqrt(2.0)},
            EulerState<double>{4.0, 0.0, 0.0}};
}

template <class S>
FanCandidate<S> ref_candidate();

template <>
inline FanCandidate<QuadExt> ref_candidate<QuadExt>() {
    return FanCandidate<QuadExt>(
        QuadExt(Rational(0), make_rational(-7, 4)),  // mu0 = -7 sqrt2 / 4
        QuadExt(0), QuadExt(make_rational(15, 7)), QuadExt(0), QuadExt(0),
        TracelessSym<QuadExt>{QuadExt(make_rational(-29, 15)), QuadExt(0)},
        QuadExt(make_rational(712, 105)));
}

template <>
inline FanCandidate<double> ref_candidate<double>() {
    return FanCandidate<double>(-7.0 / 4.0 * std::sqrt(2.0), 0.0, 15.0 / 7.0, 0.0, 0.0,
                                TracelessSym<double>{-29.0 / 15.0, 0.0}, 712.0 / 105.0);
}

inline std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v ? std::string(v) : fallback;
}

}  // namespace ecfan::testsupport
