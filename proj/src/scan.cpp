#include "ecfan/scan.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "ecfan/parallel.hpp"
#include "ecfan/parametrize.hpp"

namespace ecfan {

namespace {

std::size_t axis_count(double mn, double mx, double step) {
    return static_cast<std::size_t>(std::floor((mx - mn) / step + 1e-9)) + 1;
}

void validate_axis(double mn, double mx, double step, const char* what) {
    if (!(mn > 0) || !(mx > 0) || !(step > 0))
        throw InputError(std::string(what) + " axis needs positive min/max/step");
    if (!(mn < mx)) throw InputError(std::string(what) + " axis needs min < max");
}

// Strict ">= 0" conditions on a slack: decided outside the band, marginal
// inside it.
Verdict slack_tri(double slack, double tol) {
    if (std::abs(slack) <= tol) return Verdict::marginal;
    return slack > 0 ? Verdict::satisfied : Verdict::violated;
}

// One-sided "residual <= 0" conditions.
Verdict residual_tri(double r, double tol) {
    if (std::abs(r) <= tol) return Verdict::marginal;
    return r < 0 ? Verdict::satisfied : Verdict::violated;
}

Verdict conjoin(std::initializer_list<Verdict> vs) {
    Verdict out = Verdict::satisfied;
    for (Verdict v : vs) {
        if (v == Verdict::violated) return Verdict::violated;
        if (v == Verdict::marginal) out = Verdict::marginal;
    }
    return out;
}

}  // namespace

GridSpec default_grid() { return {1.001, 3.999, 0.005, 0.01, 3.0, 0.005}; }

std::vector<MaskRow> scan_region(const RiemannData<double>& data, const PressureLaw<double>& law,
                                 const GridSpec& grid, double tol, unsigned workers) {
    validate_axis(grid.rho1_min, grid.rho1_max, grid.rho1_step, "rho1");
    validate_axis(grid.delta2_min, grid.delta2_max, grid.delta2_step, "delta2");
    if (!(tol > 0)) throw InputError("scan tolerance must be positive");

    const std::size_t nr = axis_count(grid.rho1_min, grid.rho1_max, grid.rho1_step);
    const std::size_t nd = axis_count(grid.delta2_min, grid.delta2_max, grid.delta2_step);
    if (nr > kMaxGridPoints / nd)
        throw GridTooLarge("grid exceeds the ten-million-point cap");

    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<MaskRow> rows(nr * nd);

    parallel_for(nr, workers, [&](std::size_t i) {
        const double r1 = grid.rho1_min + static_cast<double>(i) * grid.rho1_step;

        bool defined = true;
        InterfacePoint<double> ip{r1, 0, 0};
        try {
            ip = interface_point(r1, data, law);
        } catch (const DomainError&) {
            defined = false;
        }
        const double order_slack = std::min(r1 - data.minus.rho, data.plus.rho - r1);

        for (std::size_t j = 0; j < nd; ++j) {
            const double d2 = grid.delta2_min + static_cast<double>(j) * grid.delta2_step;
            MaskRow& row = rows[i * nd + j];
            if (!defined) {
                row = {r1,  d2,  Verdict::violated, Verdict::violated, Verdict::violated,
                       Verdict::violated, nan, nan, nan, true};
                continue;
            }
            const auto en = interface_energy_residuals(ip, d2, data, law);
            row.rho1 = r1;
            row.delta2 = d2;
            row.e3 = en.e3;
            row.e4 = en.e4;
            row.delta1 = ip.delta1;
            row.domain_error = false;
            row.a = residual_tri(en.e3, tol);
            row.b = residual_tri(en.e4, tol);
            row.c = slack_tri(ip.delta1, tol);
            row.d = conjoin({slack_tri(order_slack, tol), row.a, row.b, row.c});
        }
    });
    return rows;
}

namespace {

char verdict_char(Verdict v) {
    switch (v) {
        case Verdict::satisfied: return '1';
        case Verdict::marginal: return '~';
        default: return '0';
    }
}

}  // namespace

void write_scan_csv(std::ostream& out, const std::vector<MaskRow>& rows) {
    out << "rho1,delta2,cond_a,cond_b,cond_c,cond_d,e3,e4,delta1\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%c,%c,%c,%c,%.16e,%.16e,%.16e\n", r.rho1,
                      r.delta2, verdict_char(r.a), verdict_char(r.b), verdict_char(r.c),
                      verdict_char(r.d), r.e3, r.e4, r.delta1);
        out << buf;
    }
}

}  // namespace ecfan
