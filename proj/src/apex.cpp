#include "ecfan/apex.hpp"

#include <cmath>
#include <limits>

namespace ecfan {

namespace {

struct HSample {
    double delta2;
    double e4;
};

HSample eval_h(double rho1, const RiemannData<double>& data, const PressureLaw<double>& law) {
    const double d2 = delta2_on_e3(rho1, data, law);
    const auto ip = interface_point(rho1, data, law);
    return {d2, interface_energy_residuals(ip, d2, data, law).e4};
}

int dsign(double x) { return (x > 0.0) - (x < 0.0); }

}  // namespace

ApexResult find_apex(const RiemannData<double>& data, const PressureLaw<double>& law,
                     double rho_lo, double rho_hi, double tol) {
    if (!(rho_lo < rho_hi)) throw InputError("apex bracket needs lo < hi");
    if (!(tol > 0)) throw InputError("apex tolerance must be positive");
    if (!(rho_lo > data.minus.rho && rho_hi < data.plus.rho))
        throw DomainError("apex bracket must lie strictly between the end densities");

    // Refine the bracket on 64 panels, then bisect the first sign change.
    constexpr int kPanels = 64;
    double root = 0;
    bool found = false;
    double a = 0, b = 0, ha = 0;
    bool have_bracket = false;
    double prev_x = rho_lo;
    double prev_h = eval_h(rho_lo, data, law).e4;
    if (prev_h == 0.0) {
        root = rho_lo;
        found = true;
    }
    for (int i = 1; i <= kPanels && !have_bracket && !found; ++i) {
        const double x = rho_lo + (rho_hi - rho_lo) * i / kPanels;
        const double h = eval_h(x, data, law).e4;
        if (h == 0.0) {
            root = x;
            found = true;
            break;
        }
        if (dsign(prev_h) * dsign(h) < 0) {
            a = prev_x;
            b = x;
            ha = prev_h;
            have_bracket = true;
            break;
        }
        prev_x = x;
        prev_h = h;
    }
    if (!found) {
        if (!have_bracket)
            throw NoSignChange("right-interface residual does not change sign on the bracket");
        while (b - a > std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(b))) {
            const double mid = a + (b - a) / 2;
            if (mid <= a || mid >= b) break;
            const double hm = eval_h(mid, data, law).e4;
            if (hm == 0.0) {
                a = b = mid;
                break;
            }
            if (dsign(ha) * dsign(hm) < 0) {
                b = mid;
            } else {
                a = mid;
                ha = hm;
            }
        }
        root = a + (b - a) / 2;
    }

    const auto hs = eval_h(root, data, law);
    const auto ip = interface_point(root, data, law);
    const auto en = interface_energy_residuals(ip, hs.delta2, data, law);
    if (!(std::abs(en.e3) <= tol && std::abs(en.e4) <= tol))
        throw NumericalError("apex residuals exceed the requested tolerance");
    if (!(hs.delta2 > 0))
        throw SubsolutionViolated("root lies at nonpositive delta2");
    if (!(ip.delta1 > 0))
        throw SubsolutionViolated("root violates the delta1 > 0 side condition");

    auto cand = reconstruct_candidate(ParamPoint<double>(root, hs.delta2), data, law);
    auto report = condition_residuals(data, cand, law, EnergyPolicy::conserve);
    for (const char* nm : {"order", "sc1", "sc2"})
        if (report.find(nm)->verdict != Verdict::satisfied)
            throw SubsolutionViolated(std::string("root violates the strict condition ") + nm);

    return {root, hs.delta2, en.e3, en.e4, std::move(cand), std::move(report)};
}

std::optional<Rational> snap_to_exact(double x, std::uint64_t max_den) {
    if (max_den < 1) throw InputError("snap needs max_den >= 1");
    if (!std::isfinite(x)) return std::nullopt;

    const Rational target(x);  // double -> rational is exact
    const BigInt bound(max_den);

    // Continued-fraction convergents of the exact target.  The acceptance
    // bound lies inside the 1/(2q^2) convergent zone, so no semiconvergent
    // can beat these.
    BigInt p_prev(1), q_prev(0), p_cur, q_cur;
    Rational rest = target;
    BigInt a0 = num(rest) / den(rest);
    if (rest < 0 && a0 * den(rest) != num(rest)) a0 -= 1;  // floor toward -inf
    p_cur = a0;
    q_cur = 1;
    Rational frac = rest - Rational(a0);

    Rational best;
    bool have = false;
    while (true) {
        if (q_cur > bound) break;
        const Rational cand = make_rational(p_cur, q_cur);
        // |target - p/q| < 1 / (2 q max_den), compared exactly.
        Rational diff = target - cand;
        if (diff < 0) diff = -diff;
        if (diff * Rational(2 * q_cur * bound) < 1) {
            best = cand;
            have = true;  // later convergents only tighten; keep the last
        }
        if (frac == 0) break;
        rest = Rational(1) / frac;
        BigInt a = num(rest) / den(rest);
        frac = rest - Rational(a);
        const BigInt p_next = a * p_cur + p_prev;
        const BigInt q_next = a * q_cur + q_prev;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    if (!have) return std::nullopt;
    return best;
}

CertifiedApex certify_apex(const RiemannData<QuadExt>& data, const PressureLaw<QuadExt>& law,
                           const ParamPoint<QuadExt>& p) {
    auto cand = reconstruct_candidate(p, data, law);
    auto report = condition_residuals(data, cand, law, EnergyPolicy::conserve);
    return {std::move(cand), std::move(report)};
}

}  // namespace ecfan
