#pragma once

// Grid evaluation of the four parameter-plane conditions, one mask row per
// point.  Scans are floating-point only; exact certification of chosen
// points is the verifier's job.  Three-valued verdicts (holds / fails /
// marginal within |residual| <= tol) keep boundary sets visible: the
// conserving point sits exactly on two region boundaries, which a binary
// mask would erase.

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ecfan/conditions.hpp"
#include "ecfan/euler.hpp"

namespace ecfan {

struct GridSpec {
    double rho1_min, rho1_max, rho1_step;
    double delta2_min, delta2_max, delta2_step;
};

// Axis ranges bracketing the reference scenario's end densities and its
// conserving point; the marginal tolerance paired with this grid resolves
// a visible boundary band at step 0.005.
GridSpec default_grid();
inline constexpr double kDefaultScanTol = 0.02;
inline constexpr std::size_t kMaxGridPoints = 10'000'000;

struct MaskRow {
    double rho1;
    double delta2;
    Verdict a;  // left interface energy condition, residual e3
    Verdict b;  // right interface energy condition, residual e4
    Verdict c;  // delta1 > 0
    Verdict d;  // conjunction of a, b, c and the density ordering
    double e3;
    double e4;
    double delta1;
    bool domain_error;  // interface functions undefined here; all verdicts fail
};

// One row per grid point in row-major order (rho1 outer, delta2 inner),
// byte-identical regardless of worker count.  workers = 0 picks the
// hardware concurrency.
std::vector<MaskRow> scan_region(const RiemannData<double>& data, const PressureLaw<double>& law,
                                 const GridSpec& grid, double tol = kDefaultScanTol,
                                 unsigned workers = 0);

// CSV with header rho1,delta2,cond_a,cond_b,cond_c,cond_d,e3,e4,delta1;
// verdicts as 1/0/~, residuals with 17 significant digits (nan marks
// domain-error rows).
void write_scan_csv(std::ostream& out, const std::vector<MaskRow>& rows);

}  // namespace ecfan
