#include "ecfan/rarefaction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "ecfan/parallel.hpp"

namespace ecfan {

namespace {

double sound_speed(const PressureLaw<double>& law, double rho) {
    return std::sqrt(law.K * law.gamma) * std::pow(rho, 0.5 * (law.gamma - 1.0));
}

double invariant_of(const PressureLaw<double>& law, const EulerState<double>& s) {
    return s.v2 + 2.0 * sound_speed(law, s.rho) / (law.gamma - 1.0);
}

double lambda_of(const PressureLaw<double>& law, const EulerState<double>& s) {
    return s.v2 - sound_speed(law, s.rho);
}

}  // namespace

EulerState<double> RarefactionProfile::interior(double xi) const {
    const double c = (law.gamma - 1.0) * (invariant - xi) / (law.gamma + 1.0);
    if (c <= 0.0) throw DomainError("interior evaluation right of the sonic point");
    const double rho = std::pow(c * c / (law.K * law.gamma), 1.0 / (law.gamma - 1.0));
    return {rho, left_state.v1, xi + c};
}

RarefactionProfile build_rarefaction(const RiemannData<double>& data,
                                     const PressureLaw<double>& law) {
    if (law.gamma == 1.0)
        throw DomainError("rarefaction fans need gamma > 1 (logarithmic invariant not supported)");
    if (data.minus.v1 != data.plus.v1)
        throw UnsupportedTransverse("states differ in transverse velocity");

    const double ib = invariant_of(law, data.minus);
    const double ia = invariant_of(law, data.plus);
    const double scale = std::max({1.0, std::abs(ib), std::abs(ia)});
    if (std::abs(ib - ia) > 1e-10 * scale)
        throw NotRarefactionConnectable("states do not share the wave invariant");

    const double lb = lambda_of(law, data.minus);
    const double la = lambda_of(law, data.plus);
    if (!(lb < la))
        throw NotRarefactionConnectable("characteristic speeds do not expand");

    return {lb, la, data.minus, data.plus, law, 0.5 * (ib + ia)};
}

EulerState<double> sample_profile(const RarefactionProfile& prof, double t, double x2) {
    if (!(t > 0.0)) throw InputError("profile sampling needs t > 0");
    const double xi = x2 / t;
    if (xi <= prof.xi_left) return prof.left_state;
    if (xi >= prof.xi_right) return prof.right_state;
    return prof.interior(xi);
}

EulerState<double> initial_datum(const RarefactionProfile& prof, double x2) {
    return sample_profile(prof, 1.0, -x2);
}

EulerState<double> reversed_evolution(const RarefactionProfile& prof, double t, double x2) {
    if (!(t < 1.0)) throw InputError("reversed evolution is defined for t < 1");
    return sample_profile(prof, 1.0 - t, -x2);
}

std::vector<InitialSample> initial_data_table(const RarefactionProfile& prof,
                                              double x2_min, double x2_max,
                                              std::size_t count) {
    if (!(x2_min < x2_max) || count < 2) throw InputError("bad sampling range");
    std::vector<InitialSample> table;
    table.reserve(count);
    const double h = (x2_max - x2_min) / static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i) {
        const double x2 = x2_min + static_cast<double>(i) * h;
        table.push_back({x2, initial_datum(prof, x2)});
    }
    return table;
}

void write_initial_csv(std::ostream& out, const std::vector<InitialSample>& table) {
    out << "x2,rho,v1,v2\n";
    char line[160];
    for (const auto& row : table) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", row.x2,
                      row.state.rho, row.state.v1, row.state.v2);
        out << line;
    }
}

LipschitzBound lipschitz_bound(const RarefactionProfile& prof) {
    // d v2 / d xi = 2 / (gamma + 1) everywhere in the fan; |d rho / d xi| =
    // 2 c rho^(2-gamma) / (K gamma (gamma + 1)) is monotone in rho, so its
    // maximum sits at one of the edge densities.
    const double g = prof.law.gamma;
    auto rho_slope = [&](double rho) {
        return 2.0 * sound_speed(prof.law, rho) * std::pow(rho, 2.0 - g) /
               (prof.law.K * g * (g + 1.0));
    };
    return {std::max(rho_slope(prof.left_state.rho), rho_slope(prof.right_state.rho)),
            2.0 / (g + 1.0)};
}

namespace {

struct FluxBundle {
    double mass_u, mass_f;      // conserved quantity and its x2-flux
    double mom_u, mom_f;
    double energy_u, energy_f;
};

FluxBundle fluxes(const PressureLaw<double>& law, const EulerState<double>& s) {
    const double p = pressure(law, s.rho);
    const double energy =
        0.5 * s.rho * (s.v1 * s.v1 + s.v2 * s.v2) + pressure_potential(law, s.rho);
    return {s.rho,  s.rho * s.v2,
            s.rho * s.v2, s.rho * s.v2 * s.v2 + p,
            energy, (energy + p) * s.v2};
}

}  // namespace

ResidualTriple pde_residual(const StateSampler& sampler, const PressureLaw<double>& law,
                            const SpaceTimeGrid& grid,
                            const std::vector<double>& edge_speeds,
                            unsigned workers) {
    if (!(grid.t_min > 0.0) || !(grid.t_min < grid.t_max) ||
        !(grid.x2_min < grid.x2_max) || grid.nt < 2 || grid.nx < 2)
        throw InputError("space-time grid needs 0 < t_min < t_max, x2_min < x2_max, two nodes per axis");

    const double dt = (grid.t_max - grid.t_min) / static_cast<double>(grid.nt - 1);
    const double dx = (grid.x2_max - grid.x2_min) / static_cast<double>(grid.nx - 1);
    const double ht = dt / kProbeDivisor;
    const double hx = dx / kProbeDivisor;

    std::vector<ResidualTriple> per_row(grid.nt, {0.0, 0.0, 0.0});
    parallel_for(grid.nt, workers, [&](std::size_t i) {
        const double t = grid.t_min + static_cast<double>(i) * dt;
        ResidualTriple worst{0.0, 0.0, 0.0};
        for (std::size_t j = 0; j < grid.nx; ++j) {
            const double x = grid.x2_min + static_cast<double>(j) * dx;
            bool near_edge = false;
            for (double s : edge_speeds)
                if (std::abs(x - s * t) <= kEdgeMarginCells * (dx + std::abs(s) * dt))
                    near_edge = true;
            if (near_edge) continue;

            const auto up = fluxes(law, sampler(t + ht, x));
            const auto um = fluxes(law, sampler(t - ht, x));
            const auto xp = fluxes(law, sampler(t, x + hx));
            const auto xm = fluxes(law, sampler(t, x - hx));
            const double mass =
                (up.mass_u - um.mass_u) / (2.0 * ht) + (xp.mass_f - xm.mass_f) / (2.0 * hx);
            const double mom =
                (up.mom_u - um.mom_u) / (2.0 * ht) + (xp.mom_f - xm.mom_f) / (2.0 * hx);
            const double energy = (up.energy_u - um.energy_u) / (2.0 * ht) +
                                  (xp.energy_f - xm.energy_f) / (2.0 * hx);
            worst.mass = std::max(worst.mass, std::abs(mass));
            worst.momentum = std::max(worst.momentum, std::abs(mom));
            worst.energy = std::max(worst.energy, std::abs(energy));
        }
        per_row[i] = worst;
    });

    ResidualTriple out{0.0, 0.0, 0.0};
    for (const auto& r : per_row) {
        out.mass = std::max(out.mass, r.mass);
        out.momentum = std::max(out.momentum, r.momentum);
        out.energy = std::max(out.energy, r.energy);
    }
    return out;
}

ResidualTriple pde_residual(const RarefactionProfile& prof, const SpaceTimeGrid& grid,
                            unsigned workers) {
    return pde_residual(
        [&prof](double t, double x2) { return sample_profile(prof, t, x2); }, prof.law,
        grid, {prof.xi_left, prof.xi_right}, workers);
}

}  // namespace ecfan
