#pragma once

// Locating and certifying the energy-conserving point: the parameter pair
// where both interface energy residuals vanish simultaneously.  e3 is
// linear in delta2, so the 2-d equality system reduces to one variable:
// eliminate delta2 through e3 = 0 and bisect h(rho1) = e4(rho1,
// delta2_on_e3(rho1)).  (A 2-d Newton iteration would be singular exactly
// at the answer whenever v12 = v+2 there, which kills e4's
// delta2-coefficient.)  The floating root is then snapped to small
// rationals and re-verified in exact arithmetic.

#include <cstdint>
#include <optional>

#include "ecfan/conditions.hpp"
#include "ecfan/parametrize.hpp"
#include "ecfan/rational.hpp"

namespace ecfan {

// Coefficients below this are treated as a degenerate linear solve.
inline constexpr double kDegenerateCoefTol = 1e-12;

// The delta2 with e3(rho1, delta2) = 0; e3 is affine in delta2, so two
// evaluations of the shared residual formula determine it.
template <class S>
S delta2_on_e3(const S& rho1, const RiemannData<S>& data, const PressureLaw<S>& law) {
    const auto ip = interface_point(rho1, data, law);
    const S e30 = interface_energy_residuals(ip, S(0), data, law).e3;
    const S coef = interface_energy_residuals(ip, S(1), data, law).e3 - e30;
    if (std::abs(to_double(coef)) <= kDegenerateCoefTol)
        throw DegenerateCoefficient("e3 has no delta2 dependence at this density");
    return -e30 / coef;
}

struct ApexResult {
    double rho1;
    double delta2;
    double e3;  // residuals at the root; both within the requested tolerance
    double e4;
    FanCandidate<double> candidate;
    ConditionReport<double> report;
};

// Bracket refinement (64 panels) plus bisection on h(rho1).  The bracket
// must lie strictly between the end densities.  Fails with NoSignChange if
// h never crosses zero on the refined bracket, and with SubsolutionViolated
// if the root exists but the strict side conditions do not hold there.
ApexResult find_apex(const RiemannData<double>& data, const PressureLaw<double>& law,
                     double rho_lo, double rho_hi, double tol = 1e-10);

// Best rational approximation p/q with q <= max_den and
// |x - p/q| < 1 / (2 q max_den); empty when no rational passes the bound.
// The bound is within the convergent zone (1/(2q^2)), so scanning
// continued-fraction convergents is exhaustive.
std::optional<Rational> snap_to_exact(double x, std::uint64_t max_den);

struct CertifiedApex {
    FanCandidate<QuadExt> candidate;
    ConditionReport<QuadExt> report;
};

// Exact re-verification of a snapped parameter point: reconstruct over
// Q(sqrt2) and run the full certificate.  NotRepresentable when a radicand
// leaves the field.
CertifiedApex certify_apex(const RiemannData<QuadExt>& data, const PressureLaw<QuadExt>& law,
                           const ParamPoint<QuadExt>& p);

}  // namespace ecfan
