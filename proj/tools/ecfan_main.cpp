// Command-line front end.  Five subcommands tie the library together:
//
//   verify       check every wedge condition of a scenario's candidate
//   scan         rasterize the feasibility masks over (rho1, delta2)
//   apex         locate the conserving point, snap it, certify it exactly
//   rarefaction  emit the Lipschitz initial data of the side-switched fan
//   reproduce    one-shot run of the built-in reference computation
//
// Exit codes: 0 success, 1 a verification or certification failed,
// 2 invalid input, 3 numerical failure.
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ecfan/apex.hpp"
#include "ecfan/conditions.hpp"
#include "ecfan/parametrize.hpp"
#include "ecfan/rarefaction.hpp"
#include "ecfan/scan.hpp"
#include "ecfan/scenario.hpp"

namespace {

using namespace ecfan;

// Shipped reference scenario (same document as data/witness.json).
constexpr const char* kBuiltinScenario = R"json({
  "pressure": { "K": 1, "gamma": 2 },
  "riemann": {
    "minus": { "rho": 1, "v": [0, "2*sqrt2"] },
    "plus": { "rho": 4, "v": [0, 0] }
  },
  "candidate": {
    "mu0": "-7/4*sqrt2",
    "mu1": 0,
    "rho1": "15/7",
    "v1": [0, 0],
    "u1": ["-29/15", 0],
    "C1": "712/105"
  }
})json";

Scenario<QuadExt> scenario_exact(const std::string& path) {
    return path.empty() ? parse_scenario_exact(kBuiltinScenario) : load_scenario_exact(path);
}

Scenario<double> scenario_floating(const std::string& path) {
    return path.empty() ? parse_scenario_floating(kBuiltinScenario)
                        : load_scenario_floating(path);
}

GridSpec parse_grid_spec(const std::string& s) {
    GridSpec g{};
    if (std::sscanf(s.c_str(), "%lf:%lf:%lf,%lf:%lf:%lf", &g.rho1_min, &g.rho1_max,
                    &g.rho1_step, &g.delta2_min, &g.delta2_max, &g.delta2_step) != 6)
        throw InputError("grid must be rho1_min:rho1_max:step,delta2_min:delta2_max:step");
    return g;
}

std::pair<double, double> parse_bracket(const std::string& s) {
    double lo = 0, hi = 0;
    if (std::sscanf(s.c_str(), "%lf:%lf", &lo, &hi) != 2)
        throw InputError("bracket must be lo:hi");
    return {lo, hi};
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write to '" + path + "'");
    return out;
}

std::string residual_text(const QuadExt& r) { return format_quadext(r); }

std::string residual_text(double r) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10e", r);
    return buf;
}

template <class S>
void print_report(const ConditionReport<S>& rep) {
    std::printf("arithmetic: %s\n", scalar_mode_name<S>());
    for (const auto& e : rep.entries)
        std::printf("  %-6s %-24s %s\n", e.name, residual_text(e.residual).c_str(),
                    verdict_name(e.verdict));
    std::printf("result: %s\n", rep.all_satisfied() ? "all conditions satisfied"
                                                    : "conditions violated");
}

struct VerifyOptions {
    std::string scenario;
    std::string mode = "auto";
    std::string out;
    double tol = kDefaultEqTol;
    bool admissible = false;
};

template <class S>
int verify_with(const Scenario<S>& sc, const VerifyOptions& opt) {
    if (!sc.candidate) throw InputError("scenario has no candidate block");
    const auto policy = opt.admissible ? EnergyPolicy::admissible : EnergyPolicy::conserve;
    const auto rep = condition_residuals(sc.data, *sc.candidate, sc.law, policy, opt.tol);
    print_report(rep);
    if (!opt.out.empty()) {
        auto out = open_out(opt.out);
        out << report_to_json(rep) << '\n';
    }
    return rep.all_satisfied() ? 0 : 1;
}

int run_verify(const VerifyOptions& opt) {
    if (opt.mode == "exact") return verify_with(scenario_exact(opt.scenario), opt);
    if (opt.mode == "floating") return verify_with(scenario_floating(opt.scenario), opt);
    try {
        return verify_with(scenario_exact(opt.scenario), opt);
    } catch (const ModeMismatch&) {
    } catch (const ExactnessUnavailable&) {
    } catch (const NotRepresentable&) {
    }
    return verify_with(scenario_floating(opt.scenario), opt);
}

struct ScanOptions {
    std::string scenario;
    std::string grid;
    std::string out = "scan.csv";
    double tol = kDefaultScanTol;
    unsigned workers = 0;
};

int run_scan(const ScanOptions& opt) {
    const auto sc = scenario_floating(opt.scenario);
    const auto grid = opt.grid.empty() ? default_grid() : parse_grid_spec(opt.grid);
    const auto rows = scan_region(sc.data, sc.law, grid, opt.tol, opt.workers);
    auto out = open_out(opt.out);
    write_scan_csv(out, rows);
    std::size_t holds = 0;
    for (const auto& r : rows) holds += r.d == Verdict::satisfied;
    std::printf("wrote %zu rows to %s (%zu satisfy all four conditions)\n", rows.size(),
                opt.out.c_str(), holds);
    return 0;
}

struct ApexOptions {
    std::string scenario;
    std::string bracket;
    std::string mode = "auto";
    std::string out;
    double tol = 1e-10;
    std::uint64_t max_den = 1000000;
};

nlohmann::json candidate_json(const FanCandidate<QuadExt>& c) {
    return {{"mu0", format_quadext(c.mu0)},   {"mu1", format_quadext(c.mu1)},
            {"rho1", format_quadext(c.rho1)}, {"v1", {format_quadext(c.v11), format_quadext(c.v12)}},
            {"u1", {format_quadext(c.u1.m11), format_quadext(c.u1.m12)}},
            {"C1", format_quadext(c.C1)}};
}

int run_apex(const ApexOptions& opt) {
    const auto sc = scenario_floating(opt.scenario);
    double lo, hi;
    if (opt.bracket.empty()) {
        // Default: the middle 80% of the density interval.
        const double w = 0.1 * (sc.data.plus.rho - sc.data.minus.rho);
        lo = sc.data.minus.rho + w;
        hi = sc.data.plus.rho - w;
    } else {
        std::tie(lo, hi) = parse_bracket(opt.bracket);
    }

    const auto root = find_apex(sc.data, sc.law, lo, hi, opt.tol);
    std::printf("root: rho1 = %.17g, delta2 = %.17g (e3 = %.3e, e4 = %.3e)\n", root.rho1,
                root.delta2, root.e3, root.e4);

    nlohmann::json doc{{"root",
                        {{"rho1", root.rho1},
                         {"delta2", root.delta2},
                         {"e3", root.e3},
                         {"e4", root.e4}}}};

    const auto r1 = snap_to_exact(root.rho1, opt.max_den);
    const auto d2 = snap_to_exact(root.delta2, opt.max_den);
    if (!r1 || !d2)
        throw NoSnap("root does not snap to a rational with denominator <= " +
                     std::to_string(opt.max_den));

    int rc;
    bool exact_path = opt.mode != "floating";
    std::optional<Scenario<QuadExt>> exact;
    if (exact_path) {
        try {
            exact = scenario_exact(opt.scenario);
        } catch (const ModeMismatch&) {
            if (opt.mode == "exact") throw;
            exact_path = false;
        }
    }

    if (exact_path) {
        const ParamPoint<QuadExt> p{QuadExt(*r1), QuadExt(*d2)};
        const auto cert = certify_apex(exact->data, exact->law, p);
        doc["mode"] = "exact";
        doc["snapped"] = {{"rho1", format_quadext(p.rho1)}, {"delta2", format_quadext(p.delta2)}};
        doc["candidate"] = candidate_json(cert.candidate);
        doc["report"] = nlohmann::json::parse(report_to_json(cert.report));
        std::printf("snapped: rho1 = %s, delta2 = %s\n", format_quadext(p.rho1).c_str(),
                    format_quadext(p.delta2).c_str());
        print_report(cert.report);
        rc = cert.report.all_satisfied() ? 0 : 1;
    } else {
        doc["mode"] = "floating";
        doc["report"] = nlohmann::json::parse(report_to_json(root.report));
        print_report(root.report);
        rc = root.report.all_satisfied() ? 0 : 1;
    }

    if (!opt.out.empty()) {
        auto out = open_out(opt.out);
        out << doc.dump(2) << '\n';
    }
    return rc;
}

struct RarefactionOptions {
    std::string scenario;
    std::string range = "-6:6";
    std::string out = "initial_data.csv";
    std::size_t count = 601;
    std::size_t residual_nodes = 0;
    unsigned workers = 0;
};

int run_rarefaction(const RarefactionOptions& opt) {
    const auto sc = scenario_floating(opt.scenario);
    // The fan solves the side-switched jump: dense side below, fast side
    // above, so that reversing time turns it into Lipschitz data for the
    // original orientation.
    const RiemannData<double> switched{sc.data.plus, sc.data.minus};
    const auto prof = build_rarefaction(switched, sc.law);
    const auto bound = lipschitz_bound(prof);
    std::printf("fan edges: xi in [%.17g, %.17g]\n", prof.xi_left, prof.xi_right);
    std::printf("lipschitz bounds: |drho/dx2| <= %.17g, |dv2/dx2| <= %.17g\n", bound.rho,
                bound.v2);

    const auto [x_lo, x_hi] = parse_bracket(opt.range);
    const auto table = initial_data_table(prof, x_lo, x_hi, opt.count);
    auto out = open_out(opt.out);
    write_initial_csv(out, table);
    std::printf("wrote %zu samples to %s\n", table.size(), opt.out.c_str());

    if (opt.residual_nodes > 0) {
        const SpaceTimeGrid grid{0.5, 2.0, x_lo, x_hi, opt.residual_nodes, opt.residual_nodes};
        const auto res = pde_residual(prof, grid, opt.workers);
        std::printf("conservation residuals (%zux%zu): mass %.3e, momentum %.3e, energy %.3e\n",
                    opt.residual_nodes, opt.residual_nodes, res.mass, res.momentum, res.energy);
    }
    return 0;
}

int run_reproduce(unsigned workers) {
    int failures = 0;
    auto step = [&](const char* name, bool ok) {
        std::printf("[%s] %s\n", ok ? "ok" : "FAIL", name);
        if (!ok) ++failures;
    };

    const auto exact = parse_scenario_exact(kBuiltinScenario);
    const auto floating = parse_scenario_floating(kBuiltinScenario);

    // 1. Exact certificate at the conserving point.
    const ParamPoint<QuadExt> p{QuadExt(make_rational(15, 7)), QuadExt(make_rational(51, 35))};
    const auto cert = certify_apex(exact.data, exact.law, p);
    int exact_zeros = 0;
    for (const char* nm : {"rhl1", "rhl2", "rhl3", "rhr1", "rhr2", "rhr3", "enl", "enr"})
        exact_zeros += cert.report.find(nm)->residual == QuadExt(0);
    step("exact certificate at rho1 = 15/7, delta2 = 51/35",
         cert.report.all_satisfied() && exact_zeros == 8);
    std::printf("       %d exact-zero residuals; order/sc1/sc2 strictly positive\n",
                exact_zeros);

    // 2. Search, snap, re-certify.
    const auto root = find_apex(floating.data, floating.law, 1.5, 3.0, 1e-10);
    const auto r1 = snap_to_exact(root.rho1, 1000000);
    const auto d2 = snap_to_exact(root.delta2, 1000000);
    bool pipeline_ok = r1 && d2;
    if (pipeline_ok) {
        const ParamPoint<QuadExt> q{QuadExt(*r1), QuadExt(*d2)};
        pipeline_ok = q.rho1 == p.rho1 && q.delta2 == p.delta2 &&
                      certify_apex(exact.data, exact.law, q).report.all_satisfied();
    }
    step("search + snap recovers and certifies the same point", pipeline_ok);

    // 3. Coarse feasibility scan has a nonempty conjunction region.
    const GridSpec coarse{1.001, 3.999, 0.02, 0.01, 3.0, 0.02};
    const auto rows = scan_region(floating.data, floating.law, coarse, kDefaultScanTol, workers);
    std::size_t holds = 0;
    for (const auto& r : rows) holds += r.d == Verdict::satisfied;
    step("coarse region scan finds feasible cells", holds > 0);
    std::printf("       %zu of %zu cells satisfy all four conditions\n", holds, rows.size());

    // 4. The side-switched fan solves the system to truncation accuracy.
    const RiemannData<double> switched{floating.data.plus, floating.data.minus};
    const auto prof = build_rarefaction(switched, floating.law);
    const auto res = pde_residual(prof, {0.5, 2.0, -6.0, 6.0, 200, 200}, workers);
    step("rarefaction conservation residuals below 1e-6",
         res.mass < 1e-6 && res.momentum < 1e-6 && res.energy < 1e-6);
    std::printf("       mass %.3e, momentum %.3e, energy %.3e\n", res.mass, res.momentum,
                res.energy);

    std::printf(failures == 0 ? "reproduction complete: all checks passed\n"
                              : "reproduction FAILED: %d check(s) failed\n",
                failures);
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy-conserving fan subsolutions of a two-state jump problem"};
    app.require_subcommand(1);

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Check all wedge conditions of a candidate");
    verify->add_option("--scenario", vo.scenario, "Scenario JSON (default: built-in reference)");
    verify->add_option("--mode", vo.mode, "Arithmetic: exact, floating, or auto")
        ->check(CLI::IsMember({"exact", "floating", "auto"}));
    verify->add_option("--tol", vo.tol, "Equation tolerance for floating verdicts")
        ->check(CLI::PositiveNumber);
    verify->add_flag("--admissible", vo.admissible,
                     "Require energy inequalities instead of equalities");
    verify->add_option("--out", vo.out, "Write the report as JSON to this path");

    ScanOptions so;
    auto* scan = app.add_subcommand("scan", "Rasterize feasibility masks over (rho1, delta2)");
    scan->add_option("--scenario", so.scenario, "Scenario JSON (default: built-in reference)");
    scan->add_option("--grid", so.grid,
                     "rho1_min:rho1_max:step,delta2_min:delta2_max:step");
    scan->add_option("--tol", so.tol, "Marginal-band half width")->check(CLI::PositiveNumber);
    scan->add_option("--workers", so.workers, "Worker threads (0 = hardware)")
        ->envname("ECFAN_WORKERS");
    scan->add_option("--out", so.out, "CSV output path");

    ApexOptions ao;
    auto* apex = app.add_subcommand("apex", "Locate, snap, and certify the conserving point");
    apex->add_option("--scenario", ao.scenario, "Scenario JSON (default: built-in reference)");
    apex->add_option("--bracket", ao.bracket, "Search bracket lo:hi for rho1");
    apex->add_option("--mode", ao.mode, "Certification arithmetic: exact, floating, or auto")
        ->check(CLI::IsMember({"exact", "floating", "auto"}));
    apex->add_option("--tol", ao.tol, "Residual tolerance at the root")
        ->check(CLI::PositiveNumber);
    apex->add_option("--max-den", ao.max_den, "Largest denominator tried when snapping");
    apex->add_option("--out", ao.out, "Write root + certificate as JSON to this path");

    RarefactionOptions ro;
    auto* rare = app.add_subcommand("rarefaction",
                                    "Emit Lipschitz initial data from the side-switched fan");
    rare->add_option("--scenario", ro.scenario, "Scenario JSON (default: built-in reference)");
    rare->add_option("--range", ro.range, "Sampling range lo:hi in x2");
    rare->add_option("--count", ro.count, "Number of samples")->check(CLI::PositiveNumber);
    rare->add_option("--residual", ro.residual_nodes,
                     "Also check conservation residuals on an NxN space-time grid");
    rare->add_option("--workers", ro.workers, "Worker threads (0 = hardware)")
        ->envname("ECFAN_WORKERS");
    rare->add_option("--out", ro.out, "CSV output path");

    unsigned reproduce_workers = 0;
    auto* repro = app.add_subcommand("reproduce",
                                     "Run the built-in reference computation end to end");
    repro->add_option("--workers", reproduce_workers, "Worker threads (0 = hardware)")
        ->envname("ECFAN_WORKERS");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*verify) return run_verify(vo);
        if (*scan) return run_scan(so);
        if (*apex) return run_apex(ao);
        if (*rare) return run_rarefaction(ro);
        return run_reproduce(reproduce_workers);
    } catch (const InputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
