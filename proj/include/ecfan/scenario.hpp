// JSON scenario documents: a pressure law, two-state jump data, and an
// optional wedge candidate, each numeric field given either as a JSON
// number or as an exact string ("p/q", "r*sqrt2", "p/q+r/s*sqrt2").
//
// Exact loading keeps every value in Q(sqrt2); a non-integral JSON float
// has no faithful image there and is rejected rather than rounded.
// Floating loading converts exact strings through their closest double.
#pragma once

#include <optional>
#include <string>

#include "ecfan/conditions.hpp"
#include "ecfan/euler.hpp"
#include "ecfan/quadext.hpp"

namespace ecfan {

template <class S>
struct Scenario {
    PressureLaw<S> law;
    RiemannData<S> data;
    std::optional<FanCandidate<S>> candidate;
};

// Parse a JSON document.  Throws ParseError on malformed documents or
// missing/mistyped fields, ModeMismatch when exact parsing meets a
// non-integral float, DomainError when a validated value is out of range.
Scenario<QuadExt> parse_scenario_exact(const std::string& text);
Scenario<double> parse_scenario_floating(const std::string& text);

// File variants; an unreadable path is a ParseError.
Scenario<QuadExt> load_scenario_exact(const std::string& path);
Scenario<double> load_scenario_floating(const std::string& path);

// Serialize a condition report as a JSON array of
// {"name", "kind", "residual", "verdict"} objects, residuals in the exact
// encoding when the report is exact and as decimal otherwise.
std::string report_to_json(const ConditionReport<QuadExt>& rep);
std::string report_to_json(const ConditionReport<double>& rep);

}  // namespace ecfan
