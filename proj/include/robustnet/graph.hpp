#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace robustnet {

/// Sorted, duplicate-free set of node ids.
class NodeSet {
public:
    NodeSet() = default;
    NodeSet(std::initializer_list<int> ids);
    explicit NodeSet(std::vector<int> ids);

    /// {0, 1, ..., n-1}
    static NodeSet range(int n);
    static NodeSet from_mask(std::uint64_t mask);

    void insert(int id);
    bool contains(int id) const;
    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }

    /// Bit mask over node ids; requires every id < 64.
    std::uint64_t to_mask() const;

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    const std::vector<int>& ids() const { return ids_; }

    bool operator==(const NodeSet&) const = default;

private:
    std::vector<int> ids_;
};

/// Directed influence graph on nodes 0..n-1.
///
/// An edge (j, i) means node i hears node j; the in-neighborhood of i is the
/// set of nodes whose values i receives. Undirected graphs keep a symmetric
/// edge set. Instances are built once and then only queried; const queries
/// are safe for concurrent readers.
class DiGraph {
public:
    DiGraph() = default;
    DiGraph(int n, bool directed);

    /// Insert edge (from, to); undirected graphs get the reverse pair too.
    /// Self-loops and out-of-range endpoints are rejected; duplicates are
    /// ignored.
    void add_edge(int from, int to);

    int node_count() const { return n_; }
    bool is_directed() const { return directed_; }
    bool has_edge(int from, int to) const;

    const std::vector<int>& in_neighbors_of(int i) const;
    const std::vector<int>& out_neighbors_of(int i) const;
    int in_degree(int i) const;
    int out_degree(int i) const;

    /// Smallest in-degree over all nodes (deg_i = |V_i| in the influence
    /// convention; equals the plain degree for undirected graphs).
    int min_in_degree() const;

    /// Number of stored ordered (j, i) records; an undirected edge counts twice.
    std::size_t edge_count() const { return edge_count_; }

    /// All ordered (from, to) records, lexicographically sorted.
    std::vector<std::pair<int, int>> edge_pairs() const;

    /// Canonical (lo, hi) pairs of an undirected graph, each edge once.
    std::vector<std::pair<int, int>> undirected_edge_pairs() const;

    bool operator==(const DiGraph& other) const;

private:
    void check_node(int i) const;

    int n_ = 0;
    bool directed_ = false;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<int>> in_;
    std::vector<std::vector<int>> out_;
};

/// In-neighborhood of i: { j | (j, i) is an edge }.
NodeSet in_neighbors(const DiGraph& g, int i);

/// Copy of g marked directed, with the identical ordered edge set.
DiGraph as_directed(const DiGraph& g);

/// Directed copy of g with the given ordered (from, to) records removed.
/// Records absent from g are ignored.
DiGraph with_edges_removed(const DiGraph& g,
                           const std::vector<std::pair<int, int>>& removed);

}  // namespace robustnet
