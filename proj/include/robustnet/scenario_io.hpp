#pragma once

#include <string>

#include <json.hpp>

#include "robustnet/wmsr.hpp"

namespace robustnet {

/// Scenario JSON schema (field names are frozen):
///   graph: path or inline graph object   -- or --   topology: [graph, ...]
///   f, malicious: [ids], initial_values: [reals]
///   strategy: {kind: constant|ramp|random|custom-script, model:
///              malicious|byzantine, value, values:{id:v}, base, slope,
///              lo, hi, seed, script:{id:[v...]}, byzantine_script:
///              {id:{receiver:[v...]}}}
///   weights: {kind: equal-weights|explicit-table, alpha_floor, table}
///   horizon, tol, stall_window, clamp
/// Relative graph paths resolve against base_dir.
Scenario parse_scenario(const nlohmann::json& j, const std::string& base_dir = "");
Scenario read_scenario_file(const std::string& path);
nlohmann::json emit_scenario_json(const Scenario& sc);

/// CSV columns: t,node,value,is_malicious,removed_count. The removed count
/// belongs to the filter applied at t (zero on the final row and for
/// malicious nodes).
std::string trajectory_to_csv(const Trajectory& traj, const NodeSet& malicious);

nlohmann::json verdict_to_json(const Verdict& verdict);
std::string outcome_name(Verdict::Outcome outcome);

}  // namespace robustnet
