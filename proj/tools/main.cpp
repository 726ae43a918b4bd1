// Command-line front end: graph generation, robustness analysis, consensus
// and broadcast simulation, and reproduction of the built-in claim battery.
//
// Exit codes: 0 success, 1 claim/verdict failure, 2 usage or I/O error.

#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "robustnet/claims.hpp"
#include "robustnet/construction.hpp"
#include "robustnet/cpa.hpp"
#include "robustnet/generators.hpp"
#include "robustnet/graph_io.hpp"
#include "robustnet/report.hpp"
#include "robustnet/robustness.hpp"
#include "robustnet/scenario_io.hpp"
#include "robustnet/wmsr.hpp"

namespace {

using robustnet::DiGraph;
using robustnet::NodeSet;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;

struct GenerateArgs {
    std::string family;
    int n = 0;
    int f = 1;
    int r = 2;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "auto";
};

DiGraph build_family(const GenerateArgs& a) {
    if (a.family == "complete") return robustnet::generate_complete(a.n);
    if (a.family == "star") return robustnet::generate_star(a.n);
    if (a.family == "prop1") return robustnet::prop1_graph(a.n, a.f);
    if (a.family == "fig1-tight") return robustnet::fig1_tight_graph(a.f);
    if (a.family == "prop4") return robustnet::prop4_graph();
    if (a.family == "pref-attach") {
        // smallest complete r-robust seed: K_{2r-1}
        robustnet::GrowthPolicy policy;
        policy.r = a.r;
        policy.mode = robustnet::GrowthPolicy::Mode::PreferentialAttachment;
        policy.seed = a.seed;
        return robustnet::grow(robustnet::generate_complete(2 * a.r - 1), policy, a.n);
    }
    throw std::invalid_argument("unknown family: " + a.family);
}

int run_generate(const GenerateArgs& a) {
    const DiGraph g = build_family(a);
    const std::size_t edges =
        g.is_directed() ? g.edge_count() : g.edge_count() / 2;
    const std::string summary = "n=" + std::to_string(g.node_count()) +
                                " edges=" + std::to_string(edges) +
                                " min_degree=" + std::to_string(g.min_in_degree());
    if (a.out.empty()) {
        const bool json = a.format == "json";
        std::cout << (json ? robustnet::emit_graph_json(g).dump(2) + "\n"
                           : robustnet::emit_edge_list(g));
        std::cerr << summary << "\n";
    } else {
        if (a.format == "json" ||
            (a.format == "auto" && a.out.size() >= 5 &&
             a.out.substr(a.out.size() - 5) == ".json"))
            robustnet::write_file_atomic(a.out,
                                         robustnet::emit_graph_json(g).dump(2) + "\n");
        else
            robustnet::write_file_atomic(a.out, robustnet::emit_edge_list(g));
        std::cout << summary << "\n";
    }
    return kExitOk;
}

int run_analyze(const std::string& graph_path, const std::string& out) {
    const DiGraph g = robustnet::read_graph_file(graph_path);
    const nlohmann::json j = robustnet::report_to_json(robustnet::analyze_graph(g));
    if (out.empty())
        std::cout << j.dump(2) << "\n";
    else
        robustnet::write_file_atomic(out, j.dump(2) + "\n");
    return kExitOk;
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create directory: " + dir);
}

int run_simulate_wmsr(const std::string& scenario_path, const std::string& out_dir,
                      const std::string& expect_outcome) {
    const robustnet::Scenario sc = robustnet::read_scenario_file(scenario_path);
    const robustnet::SimulationResult res = robustnet::simulate(sc);

    if (!out_dir.empty()) {
        ensure_dir(out_dir);
        robustnet::write_file_atomic(
            out_dir + "/trajectory.csv",
            robustnet::trajectory_to_csv(res.trajectory, sc.malicious));
        nlohmann::json v = robustnet::verdict_to_json(res.verdict);
        v["seed"] = sc.strategy.seed;
        robustnet::write_file_atomic(out_dir + "/verdict.json", v.dump(2) + "\n");
    }
    const std::string outcome = robustnet::outcome_name(res.verdict.outcome);
    std::cout << "outcome=" << outcome << " steps=" << res.verdict.steps_used
              << " safe=" << (res.verdict.safe ? "true" : "false");
    if (res.verdict.value) std::cout << " value=" << *res.verdict.value;
    std::cout << "\n";
    if (!expect_outcome.empty() && expect_outcome != outcome) {
        std::cerr << "expected outcome " << expect_outcome << ", got " << outcome << "\n";
        return kExitVerdict;
    }
    return kExitOk;
}

struct CpaArgs {
    std::string graph_path;
    int source = 0;
    int f = 0;
    std::vector<int> malicious;
    bool sweep = false;
    bool byzantine = false;
    std::string strategy = "silent";
    std::uint64_t seed = 0;
    std::string value = "SOURCE_VALUE";
    std::string out_dir;
};

robustnet::CpaAdversary cpa_adversary(const CpaArgs& a) {
    robustnet::CpaAdversary adv;
    if (a.strategy == "silent")
        adv.kind = robustnet::CpaAdversary::Kind::Silent;
    else if (a.strategy == "constant-lie")
        adv.kind = robustnet::CpaAdversary::Kind::ConstantLie;
    else if (a.strategy == "random-lie")
        adv.kind = robustnet::CpaAdversary::Kind::RandomLie;
    else
        throw std::invalid_argument("unknown CPA strategy: " + a.strategy);
    adv.byzantine = a.byzantine;
    adv.seed = a.seed;
    return adv;
}

int run_simulate_cpa(const CpaArgs& a) {
    const DiGraph g = robustnet::read_graph_file(a.graph_path);
    const robustnet::CpaAdversary adv = cpa_adversary(a);

    if (!a.sweep) {
        const NodeSet malicious(a.malicious);
        const robustnet::CpaResult res =
            robustnet::cpa_run(g, a.source, a.f, malicious, adv, a.value);
        if (!a.out_dir.empty()) {
            ensure_dir(a.out_dir);
            std::string csv = "round,node,accepted_value\n";
            for (const auto& ev : res.log)
                csv += std::to_string(ev.round) + "," + std::to_string(ev.node) + "," +
                       ev.accepted_value + "\n";
            robustnet::write_file_atomic(a.out_dir + "/cpa_rounds.csv", csv);
            nlohmann::json j;
            j["success"] = res.success;
            j["sound"] = res.sound;
            j["rounds"] = res.rounds;
            j["accepted"] = res.accepted.ids();
            j["accepted_count"] = res.accepted.size();
            j["seed"] = a.seed;
            robustnet::write_file_atomic(a.out_dir + "/cpa_summary.json",
                                         j.dump(2) + "\n");
        }
        std::cout << "success=" << (res.success ? "true" : "false")
                  << " rounds=" << res.rounds << " accepted=" << res.accepted.size()
                  << "\n";
        return res.success ? kExitOk : kExitVerdict;
    }

    // Sweep every f-local malicious set that avoids the source.
    nlohmann::json cases = nlohmann::json::array();
    bool all_success = true;
    for (const NodeSet& mal : robustnet::enumerate_f_local_sets(g, a.f, a.source)) {
        const robustnet::CpaResult res =
            robustnet::cpa_run(g, a.source, a.f, mal, adv, a.value);
        nlohmann::json item;
        item["malicious"] = mal.ids();
        item["success"] = res.success;
        item["sound"] = res.sound;
        item["rounds"] = res.rounds;
        cases.push_back(std::move(item));
        all_success = all_success && res.success && res.sound;
    }
    nlohmann::json j;
    j["all_success"] = all_success;
    j["case_count"] = cases.size();
    j["cases"] = std::move(cases);
    j["seed"] = a.seed;
    if (!a.out_dir.empty()) {
        ensure_dir(a.out_dir);
        robustnet::write_file_atomic(a.out_dir + "/cpa_summary.json", j.dump(2) + "\n");
    }
    std::cout << "all_success=" << (all_success ? "true" : "false")
              << " cases=" << j["case_count"] << "\n";
    return all_success ? kExitOk : kExitVerdict;
}

int run_claim_item(const std::string& label, const std::string& claim_name,
                   bool& any_failed) {
    const robustnet::Claim* claim = robustnet::find_claim(claim_name);
    if (!claim) {
        std::printf("[ERROR] %-28s unknown claim `%s`\n", label.c_str(),
                    claim_name.c_str());
        any_failed = true;
        return kExitVerdict;
    }
    robustnet::ClaimResult result;
    try {
        result = claim->run();
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %-28s %s\n", result.passed ? "PASS" : "FAIL", label.c_str(),
                result.detail.c_str());
    std::fflush(stdout);
    if (!result.passed) any_failed = true;
    return kExitOk;
}

int run_reproduce(const std::string& manifest_arg) {
    bool any_failed = false;
    if (manifest_arg == "paper-claims") {
        for (const robustnet::Claim& claim : robustnet::paper_claims())
            run_claim_item(claim.name, claim.name, any_failed);
        return any_failed ? kExitVerdict : kExitOk;
    }

    std::ifstream in(manifest_arg);
    if (!in) throw std::runtime_error("cannot open manifest: " + manifest_arg);
    nlohmann::json manifest;
    in >> manifest;
    const auto items = manifest.value("items", nlohmann::json::array());
    if (items.empty()) {
        std::cerr << "warning: empty manifest, nothing to do\n";
        return kExitOk;
    }
    const auto slash = manifest_arg.find_last_of('/');
    const std::string base_dir =
        slash == std::string::npos ? "" : manifest_arg.substr(0, slash);

    for (const auto& item : items) {
        const std::string label = item.value("name", std::string("<unnamed>"));
        try {
            if (item.contains("claim")) {
                run_claim_item(label, item.at("claim").get<std::string>(), any_failed);
                continue;
            }
            if (!item.contains("scenario")) {
                std::printf("[ERROR] %-28s item needs `claim` or `scenario`\n",
                            label.c_str());
                any_failed = true;
                continue;
            }
            std::string path = item.at("scenario").get<std::string>();
            if (!base_dir.empty() && !path.empty() && path.front() != '/')
                path = base_dir + "/" + path;
            const robustnet::Scenario sc = robustnet::read_scenario_file(path);
            const robustnet::SimulationResult res = robustnet::simulate(sc);
            bool pass = true;
            std::string why;
            if (item.contains("expect")) {
                const auto& expect = item.at("expect");
                const std::string outcome = robustnet::outcome_name(res.verdict.outcome);
                if (expect.contains("outcome") &&
                    expect.at("outcome").get<std::string>() != outcome) {
                    pass = false;
                    why = "outcome " + outcome + " != expected " +
                          expect.at("outcome").get<std::string>();
                }
                if (expect.contains("safe") &&
                    expect.at("safe").get<bool>() != res.verdict.safe) {
                    pass = false;
                    why += " safe mismatch";
                }
                if (expect.contains("value")) {
                    const double want = expect.at("value").get<double>();
                    const double tol = expect.value("tol", 1e-9);
                    if (!res.verdict.value ||
                        std::abs(*res.verdict.value - want) > tol) {
                        pass = false;
                        why += " value mismatch";
                    }
                }
            }
            std::printf("[%s] %-28s %s\n", pass ? "PASS" : "FAIL", label.c_str(),
                        pass ? robustnet::outcome_name(res.verdict.outcome).c_str()
                             : why.c_str());
            if (!pass) any_failed = true;
        } catch (const std::exception& e) {
            std::printf("[ERROR] %-28s %s\n", label.c_str(), e.what());
            any_failed = true;
        }
    }
    return any_failed ? kExitVerdict : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"r-robustness analysis, resilient consensus and broadcast simulation"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "emit a graph from a family");
    generate->add_option("--family", gen.family,
                         "complete|star|prop1|fig1-tight|prop4|pref-attach")
        ->required();
    generate->add_option("--n", gen.n, "node count / growth target");
    generate->add_option("--f", gen.f, "local fault budget parameter");
    generate->add_option("--r", gen.r, "edges per new node (pref-attach)");
    generate->add_option("--seed", gen.seed, "RNG seed");
    generate->add_option("--out", gen.out, "output file (stdout when absent)");
    generate->add_option("--format", gen.format, "edgelist|json|auto (default auto)");

    std::string analyze_graph_path, analyze_out;
    CLI::App* analyze = app.add_subcommand("analyze", "robustness report for a graph file");
    analyze->add_option("graph", analyze_graph_path, "graph file")->required();
    analyze->add_option("--out", analyze_out, "write JSON report here");

    CLI::App* simulate = app.add_subcommand("simulate", "run a consensus or broadcast simulation");
    simulate->require_subcommand(1);

    std::string wmsr_scenario, wmsr_out_dir, wmsr_expect;
    CLI::App* wmsr = simulate->add_subcommand("wmsr", "filtered-consensus scenario");
    wmsr->add_option("--scenario", wmsr_scenario, "scenario JSON file")->required();
    wmsr->add_option("--out-dir", wmsr_out_dir, "directory for trajectory.csv + verdict.json");
    wmsr->add_option("--expect", wmsr_expect, "fail unless the outcome matches");

    CpaArgs cpa;
    CLI::App* cpa_cmd = simulate->add_subcommand("cpa", "certified propagation broadcast");
    cpa_cmd->add_option("--graph", cpa.graph_path, "graph file")->required();
    cpa_cmd->add_option("--source", cpa.source, "source node id")->required();
    cpa_cmd->add_option("--f", cpa.f, "local fault budget")->required();
    cpa_cmd->add_option("--malicious", cpa.malicious, "malicious node ids");
    cpa_cmd->add_flag("--sweep-all-f-local", cpa.sweep,
                      "run every f-local malicious set avoiding the source");
    cpa_cmd->add_flag("--byzantine", cpa.byzantine, "per-receiver lies");
    cpa_cmd->add_option("--strategy", cpa.strategy, "silent|constant-lie|random-lie");
    cpa_cmd->add_option("--seed", cpa.seed, "RNG seed for random lies");
    cpa_cmd->add_option("--value", cpa.value, "broadcast payload token");
    cpa_cmd->add_option("--out-dir", cpa.out_dir, "directory for CSV/JSON outputs");

    std::string manifest;
    CLI::App* reproduce = app.add_subcommand("reproduce", "run a claim manifest");
    reproduce->add_option("manifest", manifest, "`paper-claims` or a manifest JSON file")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*generate) return run_generate(gen);
        if (*analyze) return run_analyze(analyze_graph_path, analyze_out);
        if (*wmsr) return run_simulate_wmsr(wmsr_scenario, wmsr_out_dir, wmsr_expect);
        if (*cpa_cmd) return run_simulate_cpa(cpa);
        if (*reproduce) return run_reproduce(manifest);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
