#pragma once

#include "robustnet/graph.hpp"

namespace robustnet::naive {

// Direct quantifier translations of the topological definitions, written
// without masks, pruning or shared helpers. They exist solely to cross-check
// the optimized checkers and are linked by tests and the claim battery, not
// by the core library.

bool r_reachable(const DiGraph& g, const NodeSet& s, int r);

/// Walks all 3^n assignments of nodes to (S1, S2, neither).
bool r_robust(const DiGraph& g, int r);

/// Walks all 2^n - 1 nonempty subsets.
bool strongly_r_robust(const DiGraph& g, int r);

/// Minimum-cut search by removal subsets of increasing size; n-1 for
/// complete graphs, 0 for disconnected input. Undirected graphs only.
int vertex_connectivity(const DiGraph& g);

}  // namespace robustnet::naive
