#include "robustnet/scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "robustnet/graph_io.hpp"

namespace robustnet {

namespace {

DiGraph load_topology_entry(const nlohmann::json& entry, const std::string& base_dir) {
    if (entry.is_string()) {
        std::string path = entry.get<std::string>();
        if (!base_dir.empty() && !path.empty() && path.front() != '/')
            path = base_dir + "/" + path;
        return read_graph_file(path);
    }
    return parse_graph_json(entry);
}

AdversaryStrategy parse_strategy(const nlohmann::json& j) {
    AdversaryStrategy st;
    const std::string kind = j.value("kind", "constant");
    if (kind == "constant")
        st.kind = AdversaryStrategy::Kind::Constant;
    else if (kind == "ramp")
        st.kind = AdversaryStrategy::Kind::Ramp;
    else if (kind == "random")
        st.kind = AdversaryStrategy::Kind::Random;
    else if (kind == "custom-script")
        st.kind = AdversaryStrategy::Kind::Script;
    else
        throw std::invalid_argument("scenario: unknown strategy kind `" + kind + "`");

    const std::string model = j.value("model", "malicious");
    if (model == "malicious")
        st.model = AdversaryStrategy::Model::Malicious;
    else if (model == "byzantine")
        st.model = AdversaryStrategy::Model::Byzantine;
    else
        throw std::invalid_argument("scenario: unknown adversary model `" + model + "`");

    if (j.contains("value")) st.value = j.at("value").get<double>();
    if (j.contains("values"))
        for (const auto& [node, v] : j.at("values").items())
            st.node_values[std::stoi(node)] = v.get<double>();
    st.base = j.value("base", 0.0);
    st.slope = j.value("slope", 1.0);
    st.lo = j.value("lo", 0.0);
    st.hi = j.value("hi", 1.0);
    st.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("script"))
        for (const auto& [node, series] : j.at("script").items())
            st.script[std::stoi(node)] = series.get<std::vector<double>>();
    if (j.contains("byzantine_script"))
        for (const auto& [node, per_receiver] : j.at("byzantine_script").items())
            for (const auto& [receiver, series] : per_receiver.items())
                st.byzantine_script[std::stoi(node)][std::stoi(receiver)] =
                    series.get<std::vector<double>>();
    return st;
}

WeightPolicy parse_weights(const nlohmann::json& j) {
    WeightPolicy w;
    const std::string kind = j.value("kind", "equal-weights");
    if (kind == "equal-weights")
        w.kind = WeightPolicy::Kind::EqualWeights;
    else if (kind == "explicit-table")
        w.kind = WeightPolicy::Kind::ExplicitTable;
    else
        throw std::invalid_argument("scenario: unknown weight kind `" + kind + "`");
    w.alpha_floor = j.value("alpha_floor", 0.0);
    if (j.contains("table"))
        w.table = j.at("table").get<std::vector<std::vector<double>>>();
    return w;
}

}  // namespace

Scenario parse_scenario(const nlohmann::json& j, const std::string& base_dir) {
    Scenario sc;
    if (j.contains("topology")) {
        for (const auto& entry : j.at("topology"))
            sc.topology.push_back(load_topology_entry(entry, base_dir));
    } else if (j.contains("graph")) {
        sc.topology.push_back(load_topology_entry(j.at("graph"), base_dir));
    } else {
        throw std::invalid_argument("scenario: needs `graph` or `topology`");
    }
    sc.f = j.value("f", 0);
    if (j.contains("malicious"))
        sc.malicious = NodeSet(j.at("malicious").get<std::vector<int>>());
    if (j.contains("strategy")) sc.strategy = parse_strategy(j.at("strategy"));
    if (!j.contains("initial_values"))
        throw std::invalid_argument("scenario: missing initial_values");
    sc.initial_values = j.at("initial_values").get<std::vector<double>>();
    if (j.contains("weights")) sc.weights = parse_weights(j.at("weights"));
    sc.horizon = j.value("horizon", 0);
    sc.tol = j.value("tol", 1e-9);
    sc.stall_window = j.value("stall_window", 25);
    sc.value_clamp = j.value("clamp", 1e12);
    return sc;
}

Scenario read_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    nlohmann::json j;
    in >> j;
    const auto slash = path.find_last_of('/');
    return parse_scenario(j, slash == std::string::npos ? "" : path.substr(0, slash));
}

nlohmann::json emit_scenario_json(const Scenario& sc) {
    nlohmann::json j;
    auto frames = nlohmann::json::array();
    for (const DiGraph& g : sc.topology) frames.push_back(emit_graph_json(g));
    if (frames.size() == 1)
        j["graph"] = frames.front();
    else
        j["topology"] = std::move(frames);
    j["f"] = sc.f;
    j["malicious"] = sc.malicious.ids();
    j["initial_values"] = sc.initial_values;

    nlohmann::json st;
    switch (sc.strategy.kind) {
        case AdversaryStrategy::Kind::Constant: st["kind"] = "constant"; break;
        case AdversaryStrategy::Kind::Ramp: st["kind"] = "ramp"; break;
        case AdversaryStrategy::Kind::Random: st["kind"] = "random"; break;
        case AdversaryStrategy::Kind::Script: st["kind"] = "custom-script"; break;
    }
    st["model"] = sc.strategy.model == AdversaryStrategy::Model::Byzantine
                      ? "byzantine"
                      : "malicious";
    if (sc.strategy.value) st["value"] = *sc.strategy.value;
    if (!sc.strategy.node_values.empty()) {
        nlohmann::json values = nlohmann::json::object();
        for (const auto& [node, v] : sc.strategy.node_values)
            values[std::to_string(node)] = v;
        st["values"] = std::move(values);
    }
    st["base"] = sc.strategy.base;
    st["slope"] = sc.strategy.slope;
    st["lo"] = sc.strategy.lo;
    st["hi"] = sc.strategy.hi;
    st["seed"] = sc.strategy.seed;
    if (!sc.strategy.script.empty()) {
        nlohmann::json script = nlohmann::json::object();
        for (const auto& [node, series] : sc.strategy.script)
            script[std::to_string(node)] = series;
        st["script"] = std::move(script);
    }
    if (!sc.strategy.byzantine_script.empty()) {
        nlohmann::json script = nlohmann::json::object();
        for (const auto& [node, per_receiver] : sc.strategy.byzantine_script) {
            nlohmann::json inner = nlohmann::json::object();
            for (const auto& [receiver, series] : per_receiver)
                inner[std::to_string(receiver)] = series;
            script[std::to_string(node)] = std::move(inner);
        }
        st["byzantine_script"] = std::move(script);
    }
    j["strategy"] = std::move(st);

    nlohmann::json w;
    w["kind"] = sc.weights.kind == WeightPolicy::Kind::ExplicitTable ? "explicit-table"
                                                                     : "equal-weights";
    if (sc.weights.alpha_floor > 0) w["alpha_floor"] = sc.weights.alpha_floor;
    if (!sc.weights.table.empty()) w["table"] = sc.weights.table;
    j["weights"] = std::move(w);

    j["horizon"] = sc.horizon;
    j["tol"] = sc.tol;
    j["stall_window"] = sc.stall_window;
    j["clamp"] = sc.value_clamp;
    return j;
}

std::string trajectory_to_csv(const Trajectory& traj, const NodeSet& malicious) {
    std::ostringstream out;
    out << "t,node,value,is_malicious,removed_count\n";
    out.precision(17);
    for (std::size_t t = 0; t < traj.values.size(); ++t) {
        const auto& row = traj.values[t];
        for (std::size_t i = 0; i < row.size(); ++i) {
            const bool mal = malicious.contains(static_cast<int>(i));
            const int removed =
                (!mal && t < traj.removed_count.size()) ? traj.removed_count[t][i] : 0;
            out << t << ',' << i << ',' << row[i] << ',' << (mal ? 1 : 0) << ','
                << removed << '\n';
        }
    }
    return out.str();
}

std::string outcome_name(Verdict::Outcome outcome) {
    switch (outcome) {
        case Verdict::Outcome::Converged: return "CONVERGED";
        case Verdict::Outcome::Stalled: return "STALLED";
        case Verdict::Outcome::Timeout: return "TIMEOUT";
    }
    return "UNKNOWN";
}

nlohmann::json verdict_to_json(const Verdict& verdict) {
    nlohmann::json j;
    j["outcome"] = outcome_name(verdict.outcome);
    if (verdict.value) j["value"] = *verdict.value;
    j["steps_used"] = verdict.steps_used;
    j["safe"] = verdict.safe;
    return j;
}

}  // namespace robustnet
