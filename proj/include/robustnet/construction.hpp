#pragma once

#include <cstdint>
#include <vector>

#include "robustnet/graph.hpp"

namespace robustnet {

/// How a growth step picks the r attachment targets of each new node.
struct GrowthPolicy {
    enum class Mode { UniformRandom, PreferentialAttachment, ExplicitList };
    /// Edges per new node; attaching to >= r nodes of an r-robust graph
    /// preserves r-robustness.
    int r = 1;
    Mode mode = Mode::UniformRandom;
    std::uint64_t seed = 0;
    /// Neighbor choice per added node for ExplicitList mode.
    std::vector<NodeSet> explicit_neighbors;
};

/// g plus one new node (id = old n) joined to the given neighbors;
/// undirected by default, or with in-edges only (neighbor -> new node) when
/// in_edges_only is set, which makes the result directed.
DiGraph add_node(const DiGraph& g, const NodeSet& neighbors, bool in_edges_only = false);

/// Grow seed_graph to target_n nodes, attaching each new node to exactly
/// policy.r distinct existing nodes. PreferentialAttachment weighs
/// candidates by current degree (in+out for directed graphs) and draws
/// without replacement. Deterministic for a given policy seed.
DiGraph grow(const DiGraph& seed_graph, const GrowthPolicy& policy, int target_n);

}  // namespace robustnet
