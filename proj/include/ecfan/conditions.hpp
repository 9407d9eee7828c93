#pragma once

// The algebraic certificate for a fan candidate.  A candidate is an
// energy-conserving fan subsolution iff eleven scalar conditions hold:
//
//   order : mu0 < mu1
//   rhl1  : mu0 (rho- - rho1)           = rho- v-2 - rho1 v12
//   rhl2  : mu0 (rho- v-1 - rho1 v11)   = rho- v-1 v-2 - rho1 u112
//   rhl3  : mu0 (rho- v-2 - rho1 v12)   = rho- v-2^2 + rho1 u111
//                                         + p(rho-) - p(rho1) - rho1 C1/2
//   rhr1  : mu1 (rho1 - rho+)           = rho1 v12 - rho+ v+2
//   rhr2  : mu1 (rho1 v11 - rho+ v+1)   = rho1 u112 - rho+ v+1 v+2
//   rhr3  : mu1 (rho1 v12 - rho+ v+2)   = -rho1 u111 - rho+ v+2^2
//                                         + p(rho1) - p(rho+) + rho1 C1/2
//   sc1   : v11^2 + v12^2 < C1
//   sc2   : (C1/2 - v11^2 + u111)(C1/2 - v12^2 - u111)
//                                   - (u112 - v11 v12)^2 > 0
//   enl   : mu0 (P- + rho-|v-|^2/2 - P1 - rho1 C1/2)
//             = (P- + p-) v-2 - (P1 + p1) v12
//               + rho- v-2 |v-|^2/2 - rho1 v12 C1/2
//   enr   : mu1 (P1 + rho1 C1/2 - P+ - rho+|v+|^2/2)
//             = (P1 + p1) v12 - (P+ + p+) v+2
//               + rho1 v12 C1/2 - rho+ v+2 |v+|^2/2
//
// Each residual is reported as LHS - RHS in exactly this arrangement so a
// reader can audit the transcription term by term.
//
// Admissible (energy-dissipating) variant: a jump moving at speed mu with
// energy density/flux (E_b, F_b) below and (E_a, F_a) above satisfies the
// weak energy inequality iff mu (E_a - E_b) >= F_a - F_b, i.e. iff
// mu (E_b - E_a) <= F_b - F_a.  Both energy lines above are printed in that
// orientation (below minus above on both sides), so admissibility is
// exactly residual <= 0 for enl and enr; equality is the conserving case.

#include <array>
#include <cstddef>

#include "ecfan/euler.hpp"

namespace ecfan {

enum class Verdict { satisfied, marginal, violated };
enum class CondKind { equation, strict_inequality, one_sided };
enum class EnergyPolicy { conserve, admissible };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return "satisfied";
        case Verdict::marginal: return "marginal";
        default: return "violated";
    }
}

template <class S>
struct ConditionEntry {
    const char* name;
    CondKind kind;
    S residual;  // LHS - RHS for equations/one-sided; slack (> 0 good) for strict
    Verdict verdict;
};

// Default absolute tolerance for floating-mode equations; 'marginal' extends
// to ten times this.  Exact mode ignores tolerances entirely.
inline constexpr double kDefaultEqTol = 1e-9;

template <class S>
struct ConditionReport {
    std::array<ConditionEntry<S>, 11> entries;
    EnergyPolicy policy = EnergyPolicy::conserve;
    double tol_eq = kDefaultEqTol;

    const ConditionEntry<S>& operator[](std::size_t i) const { return entries[i]; }
    const ConditionEntry<S>* find(const char* nm) const {
        for (const auto& e : entries) {
            const char *a = e.name, *b = nm;
            while (*a && *a == *b) ++a, ++b;
            if (*a == *b) return &e;
        }
        return nullptr;
    }
    bool all_satisfied() const {
        for (const auto& e : entries)
            if (e.verdict != Verdict::satisfied) return false;
        return true;
    }
};

namespace detail {

// Equation verdicts: exact mode needs residual == 0; floating mode accepts
// |r| <= tol and calls |r| <= 10 tol marginal.
template <class S>
Verdict equation_verdict(const S& r, double tol) {
    if constexpr (kExactScalar<S>) {
        return sign(r) == 0 ? Verdict::satisfied : Verdict::violated;
    } else {
        const double a = std::abs(to_double(r));
        if (a <= tol) return Verdict::satisfied;
        if (a <= 10 * tol) return Verdict::marginal;
        return Verdict::violated;
    }
}

// Strict inequalities carry a slack (positive = satisfied).  Exact mode
// decides by sign; floating mode flags a band of width tol around zero as
// marginal since strictness is not decidable there.
template <class S>
Verdict slack_verdict(const S& slack, double tol) {
    if constexpr (kExactScalar<S>) {
        return sign(slack) > 0 ? Verdict::satisfied : Verdict::violated;
    } else {
        const double s = to_double(slack);
        if (std::abs(s) <= tol) return Verdict::marginal;
        return s > 0 ? Verdict::satisfied : Verdict::violated;
    }
}

// One-sided energy conditions: residual <= 0.  Floating mode forgives up to
// +tol (the conserving case lands at roundoff-size positives).
template <class S>
Verdict one_sided_verdict(const S& r, double tol) {
    if constexpr (kExactScalar<S>) {
        return sign(r) <= 0 ? Verdict::satisfied : Verdict::violated;
    } else {
        const double a = to_double(r);
        if (a <= tol) return Verdict::satisfied;
        if (a <= 10 * tol) return Verdict::marginal;
        return Verdict::violated;
    }
}

}  // namespace detail

template <class S>
ConditionReport<S> condition_residuals(const RiemannData<S>& data, const FanCandidate<S>& cand,
                                       const PressureLaw<S>& law,
                                       EnergyPolicy policy = EnergyPolicy::conserve,
                                       double tol_eq = kDefaultEqTol) {
    const EulerState<S>&m = data.minus, &q = data.plus;
    const S &mu0 = cand.mu0, &mu1 = cand.mu1, &r1 = cand.rho1;
    const S &v11 = cand.v11, &v12 = cand.v12;
    const S &u111 = cand.u1.m11, &u112 = cand.u1.m12, &C1 = cand.C1;
    const S two(2);

    const S pm = pressure(law, m.rho), p1 = pressure(law, r1), pp = pressure(law, q.rho);
    const S Pm = pressure_potential(law, m.rho), P1 = pressure_potential(law, r1),
            Pp = pressure_potential(law, q.rho);
    const S vm_sq = m.v1 * m.v1 + m.v2 * m.v2;
    const S vp_sq = q.v1 * q.v1 + q.v2 * q.v2;

    const S order_slack = mu1 - mu0;
    const S rhl1 = mu0 * (m.rho - r1) - (m.rho * m.v2 - r1 * v12);
    const S rhl2 = mu0 * (m.rho * m.v1 - r1 * v11) - (m.rho * m.v1 * m.v2 - r1 * u112);
    const S rhl3 = mu0 * (m.rho * m.v2 - r1 * v12) -
                   (m.rho * m.v2 * m.v2 + r1 * u111 + pm - p1 - r1 * C1 / two);
    const S rhr1 = mu1 * (r1 - q.rho) - (r1 * v12 - q.rho * q.v2);
    const S rhr2 = mu1 * (r1 * v11 - q.rho * q.v1) - (r1 * u112 - q.rho * q.v1 * q.v2);
    const S rhr3 = mu1 * (r1 * v12 - q.rho * q.v2) -
                   (-(r1 * u111) - q.rho * q.v2 * q.v2 + p1 - pp + r1 * C1 / two);
    const S sc1_slack = C1 - (v11 * v11 + v12 * v12);
    const S sc2_slack = (C1 / two - v11 * v11 + u111) * (C1 / two - v12 * v12 - u111) -
                        (u112 - v11 * v12) * (u112 - v11 * v12);
    const S enl = mu0 * (Pm + m.rho * vm_sq / two - P1 - r1 * C1 / two) -
                  ((Pm + pm) * m.v2 - (P1 + p1) * v12 + m.rho * m.v2 * vm_sq / two -
                   r1 * v12 * C1 / two);
    const S enr = mu1 * (P1 + r1 * C1 / two - Pp - q.rho * vp_sq / two) -
                  ((P1 + p1) * v12 - (Pp + pp) * q.v2 + r1 * v12 * C1 / two -
                   q.rho * q.v2 * vp_sq / two);

    auto eq = [&](const char* nm, const S& r) {
        return ConditionEntry<S>{nm, CondKind::equation, r, detail::equation_verdict(r, tol_eq)};
    };
    auto strict = [&](const char* nm, const S& s) {
        return ConditionEntry<S>{nm, CondKind::strict_inequality, s,
                                 detail::slack_verdict(s, tol_eq)};
    };
    auto energy = [&](const char* nm, const S& r) {
        if (policy == EnergyPolicy::conserve) return eq(nm, r);
        return ConditionEntry<S>{nm, CondKind::one_sided, r,
                                 detail::one_sided_verdict(r, tol_eq)};
    };

    ConditionReport<S> rep;
    rep.policy = policy;
    rep.tol_eq = tol_eq;
    rep.entries = {strict("order", order_slack), eq("rhl1", rhl1),    eq("rhl2", rhl2),
                   eq("rhl3", rhl3),             eq("rhr1", rhr1),    eq("rhr2", rhr2),
                   eq("rhr3", rhr3),             strict("sc1", sc1_slack),
                   strict("sc2", sc2_slack),     energy("enl", enl),  energy("enr", enr)};
    return rep;
}

// True iff every condition holds with the energy lines at equality.
template <class S>
bool verify_energy_conserving(const RiemannData<S>& data, const FanCandidate<S>& cand,
                              const PressureLaw<S>& law, double tol_eq = kDefaultEqTol,
                              ConditionReport<S>* out = nullptr) {
    auto rep = condition_residuals(data, cand, law, EnergyPolicy::conserve, tol_eq);
    const bool ok = rep.all_satisfied();
    if (out) *out = rep;
    return ok;
}

// True iff every condition holds with the energy lines one-sided (<= 0).
template <class S>
bool verify_admissible(const RiemannData<S>& data, const FanCandidate<S>& cand,
                       const PressureLaw<S>& law, double tol_eq = kDefaultEqTol,
                       ConditionReport<S>* out = nullptr) {
    auto rep = condition_residuals(data, cand, law, EnergyPolicy::admissible, tol_eq);
    const bool ok = rep.all_satisfied();
    if (out) *out = rep;
    return ok;
}

}  // namespace ecfan
