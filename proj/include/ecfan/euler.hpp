#pragma once

// Model layer for the 2-d isentropic compressible Euler system:
// polytropic pressure law, constant states, two-state Riemann data split
// along x2 = 0, and the piecewise-constant fan candidate
//
//        x2 < mu0 t : (rho-, v-)
//   mu0 t < x2 < mu1 t : (rho1, v1, u1, C1)   (relaxed wedge)
//        x2 > mu1 t : (rho+, v+)
//
// where u1 is a traceless symmetric 2x2 matrix standing in for v (x) v, and
// C1 bounds the wedge kinetic energy density: rho1*C1/2.

#include <utility>

#include "ecfan/errors.hpp"
#include "ecfan/scalar.hpp"

namespace ecfan {

// p(rho) = K rho^gamma, gamma >= 1.  The pressure potential is
// P(rho) = K/(gamma-1) rho^gamma for gamma > 1 and K rho log(rho) at
// gamma = 1; both satisfy rho P'(rho) - P(rho) = p(rho).
template <class S>
struct PressureLaw {
    S K;
    S gamma;

    PressureLaw(S k, S g) : K(std::move(k)), gamma(std::move(g)) {
        if (sign(K) <= 0) throw DomainError("pressure law needs K > 0");
        if (sign(gamma - S(1)) < 0) throw DomainError("pressure law needs gamma >= 1");
    }
};

template <class S>
struct EulerState {
    S rho;
    S v1;
    S v2;

    EulerState(S r, S a, S b) : rho(std::move(r)), v1(std::move(a)), v2(std::move(b)) {
        if (sign(rho) <= 0) throw DomainError("state needs rho > 0");
    }
};

template <class S>
struct RiemannData {
    EulerState<S> minus;  // x2 < 0
    EulerState<S> plus;   // x2 > 0
};

template <class S>
struct TracelessSym {
    S m11;  // (1,1) entry; (2,2) is -m11
    S m12;
};

template <class S>
struct FanCandidate {
    S mu0;
    S mu1;
    S rho1;
    S v11;
    S v12;
    TracelessSym<S> u1;
    S C1;

    FanCandidate(S m0, S m1, S r1, S w1, S w2, TracelessSym<S> u, S c)
        : mu0(std::move(m0)),
          mu1(std::move(m1)),
          rho1(std::move(r1)),
          v11(std::move(w1)),
          v12(std::move(w2)),
          u1(std::move(u)),
          C1(std::move(c)) {
        if (sign(rho1) <= 0) throw DomainError("candidate needs rho1 > 0");
        if (sign(C1) <= 0) throw DomainError("candidate needs C1 > 0");
    }
};

namespace detail {

template <class S>
S int_pow(S base, long long e) {
    S acc(1);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

}  // namespace detail

template <class S>
S pressure(const PressureLaw<S>& law, const S& rho) {
    if (sign(rho) <= 0) throw DomainError("pressure needs rho > 0");
    long long g = 0;
    if (integer_value(law.gamma, g)) return law.K * detail::int_pow(rho, g);
    if constexpr (kExactScalar<S>)
        throw ExactnessUnavailable("exact pressure needs integer gamma");
    else
        return law.K * std::pow(rho, law.gamma);
}

template <class S>
S pressure_potential(const PressureLaw<S>& law, const S& rho) {
    if (sign(rho) <= 0) throw DomainError("pressure potential needs rho > 0");
    if (law.gamma == S(1)) {
        if constexpr (kExactScalar<S>)
            throw ExactnessUnavailable("pressure potential at gamma = 1 needs log");
        else
            return law.K * rho * std::log(rho);
    }
    long long g = 0;
    if (integer_value(law.gamma, g)) {
        return law.K / (law.gamma - S(1)) * detail::int_pow(rho, g);
    }
    if constexpr (kExactScalar<S>)
        throw ExactnessUnavailable("exact pressure potential needs integer gamma");
    else
        return law.K / (law.gamma - 1.0) * std::pow(rho, law.gamma);
}

}  // namespace ecfan
