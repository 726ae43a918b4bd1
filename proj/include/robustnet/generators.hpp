#pragma once

#include <cstdint>

#include "robustnet/graph.hpp"

namespace robustnet {

DiGraph generate_complete(int n);

/// Star with center 0 and leaves 1..n-1.
DiGraph generate_star(int n);

/// Two cliques A (floor(n/2) nodes, ids 0..|A|-1) and B (ceil(n/2) nodes,
/// ids |A|..n-1) bridged by the circulant rule a_i ~ b_i..b_{i+f-1}
/// (wraparound mod |B|). Every A node gets exactly f neighbors in B and
/// every B node at most f in A (exactly f when n is even). Requires
/// n >= 2f+2 and f >= 1.
DiGraph prop1_graph(int n, int f);
NodeSet prop1_a_block(int n);
NodeSet prop1_b_block(int n);

/// Node roles in fig1_tight_graph(f): cliques S1 (ids 0..2f-1),
/// S2 = S2a|S2b (ids 2f..6f-1), S3 (ids 6f..8f-1), and the sink nodes
/// a = 8f, b = 8f+1.
struct Fig1Layout {
    NodeSet s1, s2a, s2b, s3;
    int a = 0;
    int b = 0;
};
Fig1Layout fig1_layout(int f);

/// 8f+2 node directed graph: cliques S1, S2, S3; every S1 node joined
/// undirected to all of S2a and every S3 node to all of S2b; node a with
/// in-edges from all of S1 and node b with in-edges from all of S3.
DiGraph fig1_tight_graph(int f);

/// Fixed 8-node undirected graph: clique on nodes 0..4, node 5 ~ {1,2,3},
/// node 6 ~ {2,3,4}, node 7 ~ {2,3,5,6}. Ids are 0-indexed; add 1 to get
/// the conventional 1..8 labels.
DiGraph prop4_graph();

/// Erdos-Renyi G(n, p); deterministic for a given seed.
DiGraph generate_gnp(int n, double p, std::uint64_t seed, bool directed = false);

}  // namespace robustnet
