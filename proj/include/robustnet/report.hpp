#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "robustnet/graph.hpp"

namespace robustnet {

/// Topological summary of a graph. Metrics that could not be computed (size
/// guards, inapplicable preconditions) are absent and explained in `errors`.
struct RobustnessReport {
    int n = 0;
    std::optional<int> max_robust_r;
    std::optional<int> max_strong_robust_r;
    std::optional<int> connectivity;
    std::optional<int> min_degree;
    std::optional<int> x_of_g;  // absent with x_infinite set = no non-adjacent pair
    bool x_infinite = false;
    std::map<std::string, std::string> errors;
};

/// Compute every metric, capturing per-metric failures instead of aborting.
RobustnessReport analyze_graph(const DiGraph& g);

nlohmann::json report_to_json(const RobustnessReport& report);

}  // namespace robustnet
