#pragma once

#include "robustnet/graph.hpp"

namespace robustnet {

/// Vertex connectivity of an undirected graph: the size of a minimum vertex
/// cut, computed as min over non-adjacent pairs of the Menger max-flow value
/// in the vertex-split network. Complete graphs have no cut and report n-1;
/// disconnected input reports 0. Throws on directed input.
int vertex_connectivity(const DiGraph& g);

/// True iff every node is reachable from node 0 ignoring edge direction.
bool is_connected_undirected(const DiGraph& g);

}  // namespace robustnet
