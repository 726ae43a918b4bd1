#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robustnet/graph.hpp"

namespace robustnet {

/// Broadcast payloads are opaque tokens compared for equality only;
/// real-valued payloads ride along as exact-match strings.
using Message = std::string;

/// What faulty nodes do during a broadcast. Silent nodes send nothing, which
/// is the worst case against the f+1-distinct-senders rule: lies never count
/// toward the true value and forwarding the true value only helps.
struct CpaAdversary {
    enum class Kind { Silent, ConstantLie, RandomLie };
    Kind kind = Kind::Silent;
    bool byzantine = false;  // per-receiver lies for ConstantLie/RandomLie
    std::uint64_t seed = 0;
};

struct CpaRoundEvent {
    int round;
    int node;
    Message accepted_value;
};

struct CpaResult {
    /// Normal nodes holding the source value, source included.
    NodeSet accepted;
    /// Last round that produced an acceptance (0 when only the source holds it).
    int rounds = 0;
    /// accepted covers every normal node.
    bool success = false;
    /// No normal node ever committed to a value other than the source's.
    bool sound = true;
    std::vector<CpaRoundEvent> log;
};

/// Certified propagation: the source floods its value; direct neighbors of
/// the source accept immediately; any other normal node accepts a value once
/// f+1 distinct in-neighbors have relayed it identically (counted
/// cumulatively across rounds, each sender once per value). Committed values
/// are permanent and rebroadcast every round. Runs until a round adds no
/// acceptance. Requires a normal source and an f-local malicious set.
CpaResult cpa_run(const DiGraph& g, int source, int f, const NodeSet& malicious,
                  const CpaAdversary& adversary = {},
                  const Message& value = "SOURCE_VALUE");

/// Number of v's neighbors strictly closer to s than v (BFS hop distance).
/// Requires a connected undirected graph.
int x_metric(const DiGraph& g, int v, int s);

/// min X(v, s) over ordered non-adjacent pairs with v != s; empty when every
/// pair is adjacent (complete graph), i.e. the metric is vacuously infinite.
std::optional<int> x_graph(const DiGraph& g);

/// Which of the two sufficient broadcast conditions hold at this f.
struct CpaSufficiency {
    std::optional<int> x_of_g;     // empty = infinite (no non-adjacent pair)
    bool x_condition = false;      // X(G) > 2f, vacuously true when infinite
    bool strongly_robust = false;  // strongly (2f+1)-robust
    int required_r = 0;            // 2f+1
};
CpaSufficiency cpa_sufficiency_report(const DiGraph& g, int f);

}  // namespace robustnet
