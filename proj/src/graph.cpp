#include "robustnet/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace robustnet {

namespace {

// Insert into a sorted vector, ignoring duplicates. Returns true if inserted.
bool sorted_insert(std::vector<int>& v, int x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it != v.end() && *it == x) return false;
    v.insert(it, x);
    return true;
}

}  // namespace

NodeSet::NodeSet(std::initializer_list<int> ids) : ids_(ids) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

NodeSet::NodeSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

NodeSet NodeSet::range(int n) {
    NodeSet s;
    s.ids_.resize(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) s.ids_[static_cast<std::size_t>(i)] = i;
    return s;
}

NodeSet NodeSet::from_mask(std::uint64_t mask) {
    NodeSet s;
    for (int i = 0; i < 64; ++i)
        if (mask & (std::uint64_t{1} << i)) s.ids_.push_back(i);
    return s;
}

void NodeSet::insert(int id) { sorted_insert(ids_, id); }

bool NodeSet::contains(int id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::uint64_t NodeSet::to_mask() const {
    std::uint64_t m = 0;
    for (int id : ids_) {
        if (id < 0 || id >= 64)
            throw std::out_of_range("NodeSet::to_mask: node id " + std::to_string(id) +
                                    " outside 0..63");
        m |= std::uint64_t{1} << id;
    }
    return m;
}

DiGraph::DiGraph(int n, bool directed) : n_(n), directed_(directed) {
    if (n < 0) throw std::invalid_argument("DiGraph: negative node count");
    in_.resize(static_cast<std::size_t>(n));
    out_.resize(static_cast<std::size_t>(n));
}

void DiGraph::check_node(int i) const {
    if (i < 0 || i >= n_)
        throw std::out_of_range("DiGraph: node " + std::to_string(i) +
                                " out of range 0.." + std::to_string(n_ - 1));
}

void DiGraph::add_edge(int from, int to) {
    check_node(from);
    check_node(to);
    if (from == to) throw std::invalid_argument("DiGraph: self-loop rejected");
    if (sorted_insert(in_[static_cast<std::size_t>(to)], from)) {
        sorted_insert(out_[static_cast<std::size_t>(from)], to);
        ++edge_count_;
    }
    if (!directed_) {
        if (sorted_insert(in_[static_cast<std::size_t>(from)], to)) {
            sorted_insert(out_[static_cast<std::size_t>(to)], from);
            ++edge_count_;
        }
    }
}

bool DiGraph::has_edge(int from, int to) const {
    check_node(from);
    check_node(to);
    const auto& v = in_[static_cast<std::size_t>(to)];
    return std::binary_search(v.begin(), v.end(), from);
}

const std::vector<int>& DiGraph::in_neighbors_of(int i) const {
    check_node(i);
    return in_[static_cast<std::size_t>(i)];
}

const std::vector<int>& DiGraph::out_neighbors_of(int i) const {
    check_node(i);
    return out_[static_cast<std::size_t>(i)];
}

int DiGraph::in_degree(int i) const {
    return static_cast<int>(in_neighbors_of(i).size());
}

int DiGraph::out_degree(int i) const {
    return static_cast<int>(out_neighbors_of(i).size());
}

int DiGraph::min_in_degree() const {
    if (n_ == 0) return 0;
    int m = n_;
    for (const auto& v : in_) m = std::min(m, static_cast<int>(v.size()));
    return m;
}

std::vector<std::pair<int, int>> DiGraph::edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int from = 0; from < n_; ++from)
        for (int to : out_[static_cast<std::size_t>(from)]) out.emplace_back(from, to);
    return out;  // already sorted: from ascending, then to ascending
}

std::vector<std::pair<int, int>> DiGraph::undirected_edge_pairs() const {
    if (directed_)
        throw std::invalid_argument("undirected_edge_pairs: graph is directed");
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_ / 2);
    for (int from = 0; from < n_; ++from)
        for (int to : out_[static_cast<std::size_t>(from)])
            if (from < to) out.emplace_back(from, to);
    return out;
}

bool DiGraph::operator==(const DiGraph& other) const {
    return n_ == other.n_ && directed_ == other.directed_ && in_ == other.in_;
}

NodeSet in_neighbors(const DiGraph& g, int i) {
    return NodeSet(g.in_neighbors_of(i));
}

DiGraph as_directed(const DiGraph& g) {
    DiGraph d(g.node_count(), true);
    for (auto [from, to] : g.edge_pairs()) d.add_edge(from, to);
    return d;
}

DiGraph with_edges_removed(const DiGraph& g,
                           const std::vector<std::pair<int, int>>& removed) {
    std::set<std::pair<int, int>> drop(removed.begin(), removed.end());
    DiGraph d(g.node_count(), true);
    for (auto e : g.edge_pairs())
        if (!drop.count(e)) d.add_edge(e.first, e.second);
    return d;
}

}  // namespace robustnet
