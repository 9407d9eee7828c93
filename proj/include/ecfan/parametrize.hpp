#pragma once

// Two-parameter reduction of the fan construction.  For end states with
// rho- != rho+ the six jump equations determine every candidate field once
// the wedge density rho1 and the slack delta2 = C1/2 - v11^2 + u111 are
// chosen.  With the discriminant
//
//   D = (rho- - rho+)(p(rho-) - p(rho+)) - rho+ rho- (v-2 - v+2)^2
//
// the remaining wedge trace and the companion slack delta1 = C1/2 - v12^2
// - u111 have the closed forms (square roots with the "+" sign)
//
//   v12(rho1)    = [ -rho- v-2 (rho+ - rho1) - rho+ v+2 (rho1 - rho-)
//                    + sqrt(D (rho1 - rho-)(rho+ - rho1)) ]
//                  / (rho1 (rho- - rho+))
//   delta1(rho1) = -(p(rho1) - p(rho-)) / rho1
//                  + rho- (rho1 - rho-) / (rho1^2 (rho- - rho+)^2)
//                    * ( rho+ (v-2 - v+2)
//                        + sqrt(D (rho+ - rho1) / (rho1 - rho-)) )^2
//
// both well defined for rho- < rho1 < rho+.  A pair (rho1, delta2) of
// positive parameters yields an admissible fan subsolution if
//
//   cond1 : rho- < rho1 < rho+
//   cond2 : delta1(rho1) > 0
//   cond3 : e3 <= 0
//   cond4 : e4 <= 0
//
// where e3 and e4 are the left/right interface energy residuals, LHS - RHS
// of
//
//   (v12 - v-2) (p(rho-) + p(rho1) - 2 (rho1 P(rho-) - rho- P(rho1))
//                                       / (rho- - rho1))
//     <= delta1 rho1 (v12 + v-2)
//        - (delta1 + delta2) rho- rho1 (v12 - v-2) / (rho- - rho1)
//
//   (v+2 - v12) (p(rho1) + p(rho+) - 2 (rho+ P(rho1) - rho1 P(rho+))
//                                       / (rho1 - rho+))
//     <= -delta1 rho1 (v+2 + v12)
//        + (delta1 + delta2) rho1 rho+ (v+2 - v12) / (rho1 - rho+).
//
// Equality in e3/e4 is the energy-conserving case.  When v12(rho1) = v+2
// (and the transverse end velocities vanish) both sides of the cond4 line
// vanish for every delta2; the report flags this degeneracy instead of
// reinterpreting the condition.

#include <algorithm>
#include <utility>

#include "ecfan/conditions.hpp"
#include "ecfan/euler.hpp"

namespace ecfan {

template <class S>
struct ParamPoint {
    S rho1;
    S delta2;

    ParamPoint(S r, S d) : rho1(std::move(r)), delta2(std::move(d)) {
        if (sign(rho1) <= 0) throw DomainError("parameter point needs rho1 > 0");
        if (sign(delta2) <= 0) throw DomainError("parameter point needs delta2 > 0");
    }
};

// v12 and delta1 evaluated at one wedge density; the cached form lets a grid
// scan evaluate a whole delta2 column from a single evaluation.
template <class S>
struct InterfacePoint {
    S rho1;
    S v12;
    S delta1;
};

template <class S>
struct InterfaceEnergies {
    S e3;  // left interface, LHS - RHS
    S e4;  // right interface, LHS - RHS
};

// Below the float tolerance on |v12 - v+2| cond4 is treated as degenerate.
inline constexpr double kE4DegenerateTol = 1e-12;

template <class S>
struct SRReport {
    S rho1, delta2;
    S v12, delta1;
    S order_slack;  // min(rho1 - rho-, rho+ - rho1)
    S e3, e4;
    Verdict cond1, cond2, cond3, cond4;
    bool e4_degenerate = false;

    bool all_satisfied() const {
        return cond1 == Verdict::satisfied && cond2 == Verdict::satisfied &&
               cond3 == Verdict::satisfied && cond4 == Verdict::satisfied;
    }
};

template <class S>
S interface_discriminant(const RiemannData<S>& data, const PressureLaw<S>& law) {
    const EulerState<S>&m = data.minus, &q = data.plus;
    const S dv = m.v2 - q.v2;
    return (m.rho - q.rho) * (pressure(law, m.rho) - pressure(law, q.rho)) -
           q.rho * m.rho * dv * dv;
}

namespace detail {

template <class S>
void require_inside(const S& rho1, const RiemannData<S>& data) {
    if (!(sign(rho1 - data.minus.rho) > 0 && sign(data.plus.rho - rho1) > 0))
        throw DomainError("wedge density must lie strictly between the end densities");
}

template <class S>
S checked_sqrt(const S& radicand, const char* what) {
    if (sign(radicand) < 0) throw DomainError(what);
    auto r = field_sqrt(radicand);
    if (!r) throw NotRepresentable("square root leaves the exact scalar field");
    return *r;
}

}  // namespace detail

template <class S>
S v12_of(const S& rho1, const RiemannData<S>& data, const PressureLaw<S>& law) {
    detail::require_inside(rho1, data);
    const EulerState<S>&m = data.minus, &q = data.plus;
    const S D = interface_discriminant(data, law);
    const S root =
        detail::checked_sqrt(D * (rho1 - m.rho) * (q.rho - rho1), "negative radicand in v12");
    return (-(m.rho * m.v2 * (q.rho - rho1)) - q.rho * q.v2 * (rho1 - m.rho) + root) /
           (rho1 * (m.rho - q.rho));
}

template <class S>
S delta1_of(const S& rho1, const RiemannData<S>& data, const PressureLaw<S>& law) {
    detail::require_inside(rho1, data);
    const EulerState<S>&m = data.minus, &q = data.plus;
    const S D = interface_discriminant(data, law);
    const S root =
        detail::checked_sqrt(D * (q.rho - rho1) / (rho1 - m.rho), "negative radicand in delta1");
    const S term = q.rho * (m.v2 - q.v2) + root;
    const S dd = m.rho - q.rho;
    return -(pressure(law, rho1) - pressure(law, m.rho)) / rho1 +
           m.rho * (rho1 - m.rho) / (rho1 * rho1 * dd * dd) * term * term;
}

template <class S>
InterfacePoint<S> interface_point(const S& rho1, const RiemannData<S>& data,
                                  const PressureLaw<S>& law) {
    return {rho1, v12_of(rho1, data, law), delta1_of(rho1, data, law)};
}

// The two interface energy residuals at (rho1, delta2), transcribed term by
// term from the display above.  Shared by sr_conditions and the region scan
// so the two consumers cannot drift apart.
template <class S>
InterfaceEnergies<S> interface_energy_residuals(const InterfacePoint<S>& ip, const S& delta2,
                                                const RiemannData<S>& data,
                                                const PressureLaw<S>& law) {
    const EulerState<S>&m = data.minus, &q = data.plus;
    const S &r1 = ip.rho1, &v12 = ip.v12, &d1 = ip.delta1;
    const S two(2);

    const S pm = pressure(law, m.rho), p1 = pressure(law, r1), pp = pressure(law, q.rho);
    const S Pm = pressure_potential(law, m.rho), P1 = pressure_potential(law, r1),
            Pp = pressure_potential(law, q.rho);

    const S e3 = (v12 - m.v2) * (pm + p1 - two * (r1 * Pm - m.rho * P1) / (m.rho - r1)) -
                 (d1 * r1 * (v12 + m.v2) -
                  (d1 + delta2) * (m.rho * r1 * (v12 - m.v2) / (m.rho - r1)));
    const S e4 = (q.v2 - v12) * (p1 + pp - two * (q.rho * P1 - r1 * Pp) / (r1 - q.rho)) -
                 (-(d1 * r1 * (q.v2 + v12)) +
                  (d1 + delta2) * (r1 * q.rho * (q.v2 - v12) / (r1 - q.rho)));
    return {e3, e4};
}

template <class S>
SRReport<S> sr_conditions(const ParamPoint<S>& p, const RiemannData<S>& data,
                          const PressureLaw<S>& law, double tol = kDefaultEqTol) {
    const auto ip = interface_point(p.rho1, data, law);
    const auto en = interface_energy_residuals(ip, p.delta2, data, law);

    SRReport<S> rep{p.rho1,
                    p.delta2,
                    ip.v12,
                    ip.delta1,
                    std::min(p.rho1 - data.minus.rho, data.plus.rho - p.rho1),
                    en.e3,
                    en.e4,
                    Verdict::violated,
                    Verdict::violated,
                    Verdict::violated,
                    Verdict::violated,
                    false};
    rep.cond1 = detail::slack_verdict(rep.order_slack, tol);
    rep.cond2 = detail::slack_verdict(ip.delta1, tol);
    rep.cond3 = detail::one_sided_verdict(en.e3, tol);
    rep.cond4 = detail::one_sided_verdict(en.e4, tol);

    const S gap = ip.v12 - data.plus.v2;
    if constexpr (kExactScalar<S>)
        rep.e4_degenerate = sign(gap) == 0;
    else
        rep.e4_degenerate = std::abs(to_double(gap)) <= kE4DegenerateTol;
    return rep;
}

// Rebuild the full candidate from (rho1, delta2).  The jump equations fix
// the interface speeds from the mass jumps, the transverse pair from the
// 2x2 linear system of the first momentum components, and the wedge energy
// from the slack substitution; all six jump equations then hold identically.
template <class S>
FanCandidate<S> reconstruct_candidate(const ParamPoint<S>& p, const RiemannData<S>& data,
                                      const PressureLaw<S>& law) {
    const EulerState<S>&m = data.minus, &q = data.plus;
    if (sign(p.rho1 - m.rho) == 0 || sign(p.rho1 - q.rho) == 0)
        throw DegenerateSpeeds("wedge density equals an end density");

    const auto ip = interface_point(p.rho1, data, law);
    const S &r1 = ip.rho1, &v12 = ip.v12, &d1 = ip.delta1;
    const S two(2);

    const S mu0 = (m.rho * m.v2 - r1 * v12) / (m.rho - r1);
    const S mu1 = (r1 * v12 - q.rho * q.v2) / (r1 - q.rho);
    if (sign(mu1 - mu0) == 0) throw DegenerateSpeeds("coincident interface speeds");

    const S b1 = m.rho * m.v1 * (m.v2 - mu0);
    const S b2 = q.rho * q.v1 * (mu1 - q.v2);
    const S v11 = (b1 + b2) / (r1 * (mu1 - mu0));
    const S u112 = b1 / r1 + mu0 * v11;

    const S C1 = d1 + p.delta2 + v11 * v11 + v12 * v12;
    const S u111 = C1 / two - v12 * v12 - d1;
    return FanCandidate<S>(mu0, mu1, r1, v11, v12, TracelessSym<S>{u111, u112}, C1);
}

}  // namespace ecfan
