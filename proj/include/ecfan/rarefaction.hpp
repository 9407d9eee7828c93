// Single-rarefaction solutions of the 1-d (in x2) isentropic system and the
// Lipschitz initial data obtained from them by time reversal.
//
// For gamma > 1 the implemented wave family keeps
//
//     I = v2 + 2 c / (gamma - 1),     c = sqrt(K gamma) rho^((gamma-1)/2)
//
// constant, and its characteristic speed is lambda = v2 - c.  Two states
// joined by such a fan must share I and satisfy lambda_below < lambda_above
// (expansive ordering).  Inside the fan the self-similarity relation
// lambda = xi = x2 / t closes the profile in explicit form:
//
//     c(xi)   = (gamma - 1) (I - xi) / (gamma + 1)
//     v2(xi)  = xi + c(xi)
//     rho(xi) = (c(xi)^2 / (K gamma))^(1/(gamma-1))
//
// The transverse velocity v1 rides along unchanged.  The reflected family
// (speed v2 + c) is the image of this one under v2 -> -v2 and is not built
// separately.  gamma = 1 uses a different invariant and is rejected.
//
// Time reversal: u(t, x2) = profile(1 - t, -x2) evolves the t = 1 slice
// (reflected in x2) back into the jump data, so initial_datum(x2) =
// sample_profile(prof, 1, -x2) is Lipschitz data whose forward evolution
// reaches the original Riemann data at t = 1.
#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "ecfan/errors.hpp"
#include "ecfan/euler.hpp"

namespace ecfan {

struct RarefactionProfile {
    double xi_left;   // fan edge speeds in the similarity variable xi = x2/t
    double xi_right;
    EulerState<double> left_state;   // state for xi <= xi_left
    EulerState<double> right_state;  // state for xi >= xi_right
    PressureLaw<double> law;
    double invariant;  // shared value of v2 + 2c/(gamma-1)

    // Closed-form interior state; meaningful for xi in [xi_left, xi_right].
    EulerState<double> interior(double xi) const;
};

// Requires matching transverse velocity, matching invariant (1e-10 relative)
// and strictly expansive ordering of the edge speeds.
// Throws UnsupportedTransverse, NotRarefactionConnectable, DomainError.
RarefactionProfile build_rarefaction(const RiemannData<double>& data,
                                     const PressureLaw<double>& law);

// State at (t, x2) with t > 0: edge states outside the fan, closed form
// inside.  Throws InputError for t <= 0.
EulerState<double> sample_profile(const RarefactionProfile& prof, double t, double x2);

// The t = 1 slice reflected in x2; Lipschitz in x2.
EulerState<double> initial_datum(const RarefactionProfile& prof, double x2);

// Forward evolution of initial_datum: u(t, x2) = profile(1 - t, -x2), t < 1.
EulerState<double> reversed_evolution(const RarefactionProfile& prof, double t, double x2);

struct InitialSample {
    double x2;
    EulerState<double> state;
};

std::vector<InitialSample> initial_data_table(const RarefactionProfile& prof,
                                              double x2_min, double x2_max,
                                              std::size_t count);

// CSV columns: x2,rho,v1,v2
void write_initial_csv(std::ostream& out, const std::vector<InitialSample>& table);

// Analytic bounds on |d rho / d xi| and |d v2 / d xi| over the fan; the
// difference quotients of any sampling of initial_datum stay below them.
struct LipschitzBound {
    double rho;
    double v2;
};

LipschitzBound lipschitz_bound(const RarefactionProfile& prof);

struct SpaceTimeGrid {
    double t_min;  // must be > 0
    double t_max;
    double x2_min;
    double x2_max;
    std::size_t nt;  // nodes per axis, >= 2
    std::size_t nx;
};

struct ResidualTriple {
    double mass;
    double momentum;  // x2-momentum; the x1 equation is v1 times mass
    double energy;
};

// Central finite differences of mass, x2-momentum and total-energy balance,
// maximized over grid nodes.  The probe step is the grid spacing divided by
// kProbeDivisor, so the residual of a smooth exact solution is pure
// truncation error and still shrinks at second order when the grid is
// refined.  Nodes within kEdgeMarginCells cells of a listed edge line
// x2 = speed * t are skipped (the profile has kinks there).
inline constexpr double kProbeDivisor = 512.0;
inline constexpr double kEdgeMarginCells = 2.0;

using StateSampler = std::function<EulerState<double>(double t, double x2)>;

ResidualTriple pde_residual(const StateSampler& sampler, const PressureLaw<double>& law,
                            const SpaceTimeGrid& grid,
                            const std::vector<double>& edge_speeds,
                            unsigned workers = 0);

ResidualTriple pde_residual(const RarefactionProfile& prof, const SpaceTimeGrid& grid,
                            unsigned workers = 0);

}  // namespace ecfan
