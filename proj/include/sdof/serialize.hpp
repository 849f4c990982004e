#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sdof/converse.hpp"
#include "sdof/sweep.hpp"
#include "sdof/verify.hpp"

namespace sdof {

nlohmann::json topology_to_json(const Topology& topology);
Topology topology_from_json(const nlohmann::json& j);

nlohmann::json sweep_config_to_json(const SweepConfig& config);

// Accepts either a bare config object or a full manifest (the "config" key),
// so a recorded manifest can be replayed directly.
SweepConfig sweep_config_from_json(const nlohmann::json& j);

nlohmann::json plan_to_json(const SignalingPlan& plan);

// Versioned record of one sweep: the exact configuration plus everything the
// run derived (gains, schedule, per-point measurements, fitted slopes).
nlohmann::json curve_manifest(const RateCurve& curve, const SweepConfig& config);

nlohmann::json check_report_to_json(const CheckReport& report);
nlohmann::json suite_report_to_json(const SuiteReport& report);

// "lo:hi:n" for a log-spaced grid, or a comma-separated list of powers.
std::vector<double> parse_pgrid(const std::string& text);

}  // namespace sdof
