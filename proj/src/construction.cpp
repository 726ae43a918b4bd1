#include "robustnet/construction.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace robustnet {

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

// One weighted draw without replacement; weights[i] == 0 marks consumed slots.
int weighted_pick(std::mt19937_64& rng, std::vector<std::uint64_t>& weights) {
    std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
    if (total == 0) throw std::logic_error("weighted_pick: no remaining weight");
    std::uint64_t x = bounded(rng, total);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (x < weights[i]) {
            weights[i] = 0;
            return static_cast<int>(i);
        }
        x -= weights[i];
    }
    throw std::logic_error("weighted_pick: fell off the distribution");
}

NodeSet pick_targets(const DiGraph& g, const GrowthPolicy& policy, std::mt19937_64& rng) {
    const int n = g.node_count();
    std::vector<std::uint64_t> weights(static_cast<std::size_t>(n), 1);
    if (policy.mode == GrowthPolicy::Mode::PreferentialAttachment) {
        int eligible = 0;
        for (int i = 0; i < n; ++i) {
            const int deg = g.is_directed() ? g.in_degree(i) + g.out_degree(i)
                                            : g.in_degree(i);
            weights[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(deg);
            if (deg > 0) ++eligible;
        }
        if (eligible < policy.r)
            throw std::invalid_argument(
                "grow: preferential attachment needs at least r nodes of positive degree");
    }
    NodeSet chosen;
    for (int k = 0; k < policy.r; ++k) chosen.insert(weighted_pick(rng, weights));
    return chosen;
}

}  // namespace

DiGraph add_node(const DiGraph& g, const NodeSet& neighbors, bool in_edges_only) {
    if (neighbors.empty()) throw std::invalid_argument("add_node: empty neighbor set");
    for (int id : neighbors)
        if (id < 0 || id >= g.node_count())
            throw std::out_of_range("add_node: unknown node id " + std::to_string(id));
    const int fresh = g.node_count();
    DiGraph grown(fresh + 1, g.is_directed() || in_edges_only);
    for (auto [from, to] : g.edge_pairs()) grown.add_edge(from, to);
    for (int nb : neighbors) {
        grown.add_edge(nb, fresh);
        if (!in_edges_only && grown.is_directed()) grown.add_edge(fresh, nb);
    }
    return grown;
}

DiGraph grow(const DiGraph& seed_graph, const GrowthPolicy& policy, int target_n) {
    if (policy.r < 1) throw std::invalid_argument("grow: policy.r must be >= 1");
    if (target_n < seed_graph.node_count())
        throw std::invalid_argument("grow: target_n below seed size");
    if (policy.mode == GrowthPolicy::Mode::ExplicitList &&
        static_cast<int>(policy.explicit_neighbors.size()) <
            target_n - seed_graph.node_count())
        throw std::invalid_argument("grow: explicit_neighbors shorter than the growth run");

    std::mt19937_64 rng(policy.seed);
    DiGraph g = seed_graph;
    std::size_t step = 0;
    while (g.node_count() < target_n) {
        if (policy.r > g.node_count())
            throw std::invalid_argument("grow: r exceeds current node count " +
                                        std::to_string(g.node_count()));
        NodeSet targets = policy.mode == GrowthPolicy::Mode::ExplicitList
                              ? policy.explicit_neighbors[step]
                              : pick_targets(g, policy, rng);
        if (policy.mode == GrowthPolicy::Mode::ExplicitList &&
            targets.size() != policy.r)
            throw std::invalid_argument("grow: explicit neighbor set size != r");
        g = add_node(g, targets);
        ++step;
    }
    return g;
}

}  // namespace robustnet
