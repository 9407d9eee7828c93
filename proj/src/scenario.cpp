#include "ecfan/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ecfan {

namespace {

using nlohmann::json;

const json& need(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

QuadExt exact_scalar(const json& v, const char* field) {
    if (v.is_number_integer()) return QuadExt(static_cast<long long>(v.get<std::int64_t>()));
    if (v.is_number_float()) {
        const double d = v.get<double>();
        if (std::trunc(d) == d && std::abs(d) < 9.0e15)
            return QuadExt(static_cast<long long>(d));
        throw ModeMismatch(std::string("field '") + field +
                           "' is a non-integral float; exact mode needs an exact string");
    }
    if (v.is_string()) return parse_quadext(v.get<std::string>());
    throw ParseError(std::string("field '") + field + "' must be a number or string");
}

double floating_scalar(const json& v, const char* field) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return to_double(parse_quadext(v.get<std::string>()));
    throw ParseError(std::string("field '") + field + "' must be a number or string");
}

template <class S>
S scalar_from(const json& v, const char* field) {
    if constexpr (kExactScalar<S>)
        return exact_scalar(v, field);
    else
        return floating_scalar(v, field);
}

template <class S>
std::pair<S, S> pair_from(const json& v, const char* field) {
    if (!v.is_array() || v.size() != 2)
        throw ParseError(std::string("field '") + field + "' must be a two-entry array");
    return {scalar_from<S>(v[0], field), scalar_from<S>(v[1], field)};
}

template <class S>
EulerState<S> state_from(const json& j, const char* which) {
    if (!j.is_object()) throw ParseError(std::string("state '") + which + "' must be an object");
    auto [v1, v2] = pair_from<S>(need(j, "v"), "v");
    return {scalar_from<S>(need(j, "rho"), "rho"), std::move(v1), std::move(v2)};
}

template <class S>
Scenario<S> scenario_from(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("scenario must be a JSON object");

    const json& pr = need(j, "pressure");
    PressureLaw<S> law{scalar_from<S>(need(pr, "K"), "K"),
                       scalar_from<S>(need(pr, "gamma"), "gamma")};

    const json& rm = need(j, "riemann");
    RiemannData<S> data{state_from<S>(need(rm, "minus"), "minus"),
                        state_from<S>(need(rm, "plus"), "plus")};

    std::optional<FanCandidate<S>> cand;
    if (const auto it = j.find("candidate"); it != j.end() && !it->is_null()) {
        const json& c = *it;
        auto [v11, v12] = pair_from<S>(need(c, "v1"), "v1");
        auto [m11, m12] = pair_from<S>(need(c, "u1"), "u1");
        cand.emplace(scalar_from<S>(need(c, "mu0"), "mu0"),
                     scalar_from<S>(need(c, "mu1"), "mu1"),
                     scalar_from<S>(need(c, "rho1"), "rho1"), std::move(v11),
                     std::move(v12), TracelessSym<S>{std::move(m11), std::move(m12)},
                     scalar_from<S>(need(c, "C1"), "C1"));
    }
    return {std::move(law), std::move(data), std::move(cand)};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kind_name(CondKind k) {
    switch (k) {
        case CondKind::equation: return "equation";
        case CondKind::strict_inequality: return "strict_inequality";
        default: return "one_sided";
    }
}

std::string residual_string(const QuadExt& r) { return format_quadext(r); }

std::string residual_string(double r) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", r);
    return buf;
}

template <class S>
std::string report_json(const ConditionReport<S>& rep) {
    json arr = json::array();
    for (const auto& e : rep.entries) {
        arr.push_back({{"name", e.name},
                       {"kind", kind_name(e.kind)},
                       {"residual", residual_string(e.residual)},
                       {"verdict", verdict_name(e.verdict)}});
    }
    return arr.dump(2);
}

}  // namespace

Scenario<QuadExt> parse_scenario_exact(const std::string& text) {
    return scenario_from<QuadExt>(text);
}

Scenario<double> parse_scenario_floating(const std::string& text) {
    return scenario_from<double>(text);
}

Scenario<QuadExt> load_scenario_exact(const std::string& path) {
    return parse_scenario_exact(slurp(path));
}

Scenario<double> load_scenario_floating(const std::string& path) {
    return parse_scenario_floating(slurp(path));
}

std::string report_to_json(const ConditionReport<QuadExt>& rep) { return report_json(rep); }

std::string report_to_json(const ConditionReport<double>& rep) { return report_json(rep); }

}  // namespace ecfan
