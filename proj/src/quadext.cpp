#include "ecfan/quadext.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>
#include <cmath>
#include <cstddef>
#include <vector>

namespace ecfan {

namespace mp = boost::multiprecision;
using BinFloat = mp::cpp_bin_float_100;

// ── rational text form ──────────────────────────────────────────────────

namespace {

bool parse_bigint(const std::string& s, BigInt& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    out = BigInt(s);
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    BigInt n, d = 1;
    if (slash == std::string::npos) {
        if (!parse_bigint(text, n)) throw ParseError("bad rational: '" + text + "'");
    } else {
        if (!parse_bigint(text.substr(0, slash), n) || !parse_bigint(text.substr(slash + 1), d))
            throw ParseError("bad rational: '" + text + "'");
        if (d == 0) throw ParseError("zero denominator: '" + text + "'");
    }
    return make_rational(n, d);
}

std::string format_rational(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// ── sign ────────────────────────────────────────────────────────────────

int sign(const QuadExt& x) {
    const int sa = sign_of(x.rational_part());
    const int sb = sign_of(x.sqrt2_coeff());
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt2  <=>  a^2 vs 2 b^2.
    const Rational a2 = x.rational_part() * x.rational_part();
    const Rational b2 = 2 * x.sqrt2_coeff() * x.sqrt2_coeff();
    if (a2 == b2) return 0;  // impossible for nonzero x, kept for safety
    return (a2 > b2) ? sa : sb;
}

// ── exact square root ───────────────────────────────────────────────────

std::optional<QuadExt> sqrt_exact(const Rational& q) {
    if (q < 0) throw NegativeRadicand("sqrt of negative rational");
    if (q == 0) return QuadExt(0);
    if (auto r = rational_sqrt(q)) return QuadExt(*r);
    if (auto r = rational_sqrt(q / 2)) return QuadExt(Rational(0), *r);
    return std::nullopt;
}

// ── nearest-double conversion ───────────────────────────────────────────

namespace {

BinFloat to_bin_float(const Rational& q) {
    return BinFloat(numerator(q)) / BinFloat(denominator(q));
}

const BinFloat& sqrt2_bin() {
    static const BinFloat s = sqrt(BinFloat(2));
    return s;
}

}  // namespace

double to_double(const QuadExt& x) {
    if (x.is_zero()) return 0.0;
    const int sa = sign_of(x.rational_part());
    const int sb = sign_of(x.sqrt2_coeff());
    BinFloat v;
    if (sa * sb >= 0) {
        v = to_bin_float(x.rational_part()) + to_bin_float(x.sqrt2_coeff()) * sqrt2_bin();
    } else {
        // a and b*sqrt2 oppose: route through the conjugate so the working
        // precision never has to absorb the cancellation.
        Rational norm = x.rational_part() * x.rational_part() -
                        2 * x.sqrt2_coeff() * x.sqrt2_coeff();
        BinFloat conj =
            to_bin_float(x.rational_part()) - to_bin_float(x.sqrt2_coeff()) * sqrt2_bin();
        v = to_bin_float(norm) / conj;
    }
    const double d = v.convert_to<double>();
    if (!std::isfinite(d)) throw Overflow("value outside double range");
    return d;
}

// ── field text form ─────────────────────────────────────────────────────

namespace {

// One signed term: "p", "p/q", "p/q*sqrt2", "sqrt2".  Returns true when the
// term carries the sqrt2 marker.
bool parse_term(const std::string& term, Rational& coeff) {
    std::string body = term;
    bool neg = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        neg = body[0] == '-';
        body = body.substr(1);
    }
    bool has_sqrt2 = false;
    const std::string marker = "sqrt2";
    if (body.size() >= marker.size() &&
        body.compare(body.size() - marker.size(), marker.size(), marker) == 0) {
        has_sqrt2 = true;
        body = body.substr(0, body.size() - marker.size());
        if (!body.empty()) {
            if (body.back() != '*') throw ParseError("expected '*' before sqrt2");
            body.pop_back();
        }
    }
    if (body.empty() && !has_sqrt2) throw ParseError("empty term");
    coeff = body.empty() ? Rational(1) : parse_rational(body);
    if (neg) coeff = -coeff;
    return has_sqrt2;
}

}  // namespace

QuadExt parse_quadext(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty number");

    // Split into at most two signed terms.
    std::vector<std::string> terms;
    std::size_t start = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '*' && s[i - 1] != '+' &&
            s[i - 1] != '-' && s[i - 1] != '/') {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    terms.push_back(s.substr(start));
    if (terms.size() > 2) throw ParseError("too many terms: '" + text + "'");

    Rational a = 0, b = 0;
    bool seen_rat = false, seen_sqrt2 = false;
    for (const auto& t : terms) {
        Rational coeff;
        if (parse_term(t, coeff)) {
            if (seen_sqrt2) throw ParseError("duplicate sqrt2 term: '" + text + "'");
            seen_sqrt2 = true;
            b = coeff;
        } else {
            if (seen_rat) throw ParseError("duplicate rational term: '" + text + "'");
            seen_rat = true;
            a = coeff;
        }
    }
    return QuadExt(a, b);
}

std::string format_quadext(const QuadExt& x) {
    const Rational& a = x.rational_part();
    const Rational& b = x.sqrt2_coeff();
    if (b == 0) return format_rational(a);

    auto sqrt2_term = [](const Rational& coeff_abs) {
        if (coeff_abs == 1) return std::string("sqrt2");
        return format_rational(coeff_abs) + "*sqrt2";
    };
    if (a == 0) return (b < 0 ? "-" : "") + sqrt2_term(abs(b));
    return format_rational(a) + (b < 0 ? "-" : "+") + sqrt2_term(abs(b));
}

}  // namespace ecfan
