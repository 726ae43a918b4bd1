#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "robustnet/graph.hpp"

namespace robustnet {

/// Node-count ceiling for the subset-enumeration checkers. Defaults are
/// per-checker; the ROBUSTNET_MAX_EXHAUSTIVE_N environment variable
/// overrides them (hard cap 63 for the bit-mask representation). Inputs
/// beyond the limit raise std::invalid_argument — there is no sampling
/// fallback.
int exhaustive_node_limit(int default_limit);

/// True iff some member of s has at least r in-neighbors outside s.
/// s must be nonempty and within range; r >= 1.
bool is_r_reachable(const DiGraph& g, const NodeSet& s, int r);

/// Exact check of the r-robust property: every pair of nonempty disjoint
/// node subsets contains an r-reachable one. Exhaustive over subsets;
/// default limit n <= 14.
bool is_r_robust(const DiGraph& g, int r);

/// Pair of disjoint nonempty sets of which neither is r-reachable, if one
/// exists (a certificate that g is not r-robust).
std::optional<std::pair<NodeSet, NodeSet>> non_robust_witness(const DiGraph& g, int r);

/// Largest r with is_r_robust(g, r), 0 if not even 1-robust. Trivial graphs
/// (n <= 1) report the convention value 0.
int max_robustness(const DiGraph& g);

/// Exact check of the strongly r-robust property: every nonempty subset is
/// r-reachable or contains a node whose in-neighborhood covers everything
/// outside the subset. Default limit n <= 20.
bool is_strongly_r_robust(const DiGraph& g, int r);

/// Largest r in 1..n with is_strongly_r_robust(g, r), 0 if none (or n <= 1).
/// Complete graphs satisfy the covering clause at every r and saturate at n.
int max_strong_robustness(const DiGraph& g);

/// True iff every node outside s has at most f in-neighbors inside s.
/// The empty set is f-local for every f >= 0.
bool is_f_local(const DiGraph& g, const NodeSet& s, int f);

/// True iff some root reaches every node along influence direction (j -> i).
bool has_spanning_tree(const DiGraph& g);

/// All f-local subsets of V (minus an optional excluded node), by ascending
/// mask. Exhaustive over 2^n subsets; default limit n <= 20.
std::vector<NodeSet> enumerate_f_local_sets(const DiGraph& g, int f,
                                            std::optional<int> excluded = std::nullopt);

}  // namespace robustnet
