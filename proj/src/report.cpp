#include "robustnet/report.hpp"

#include <exception>

#include "robustnet/connectivity.hpp"
#include "robustnet/cpa.hpp"
#include "robustnet/robustness.hpp"

namespace robustnet {

RobustnessReport analyze_graph(const DiGraph& g) {
    RobustnessReport report;
    report.n = g.node_count();
    report.min_degree = g.min_in_degree();

    auto attempt = [&report](const char* metric, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            report.errors[metric] = e.what();
        }
    };
    attempt("max_robust_r", [&] { report.max_robust_r = max_robustness(g); });
    attempt("max_strong_robust_r",
            [&] { report.max_strong_robust_r = max_strong_robustness(g); });
    attempt("connectivity", [&] { report.connectivity = vertex_connectivity(g); });
    attempt("x_of_g", [&] {
        const auto x = x_graph(g);
        if (x)
            report.x_of_g = *x;
        else
            report.x_infinite = true;
    });
    return report;
}

nlohmann::json report_to_json(const RobustnessReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    auto put = [&j](const char* key, const std::optional<int>& v) {
        if (v) j[key] = *v;
    };
    put("max_robust_r", report.max_robust_r);
    put("max_strong_robust_r", report.max_strong_robust_r);
    put("connectivity", report.connectivity);
    put("min_degree", report.min_degree);
    if (report.x_infinite)
        j["x_of_g"] = "infinity";
    else
        put("x_of_g", report.x_of_g);
    if (!report.errors.empty()) {
        nlohmann::json errs = nlohmann::json::object();
        for (const auto& [metric, why] : report.errors) errs[metric] = why;
        j["errors"] = std::move(errs);
    }
    return j;
}

}  // namespace robustnet
