#include "robustnet/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace robustnet {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

// Unit-capacity max flow via BFS augmentation, small graphs only.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : head_(static_cast<std::size_t>(n), -1) {}

    void add_arc(int u, int v, int cap) {
        arcs_.push_back({v, head_[static_cast<std::size_t>(u)], cap});
        head_[static_cast<std::size_t>(u)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({u, head_[static_cast<std::size_t>(v)], 0});
        head_[static_cast<std::size_t>(v)] = static_cast<int>(arcs_.size()) - 1;
    }

    int max_flow(int s, int t, int stop_at) {
        int flow = 0;
        while (flow < stop_at && augment(s, t)) ++flow;
        return flow;
    }

private:
    struct Arc {
        int to;
        int next;
        int cap;
    };

    bool augment(int s, int t) {
        std::vector<int> via(head_.size(), -1);
        std::queue<int> q;
        q.push(s);
        via[static_cast<std::size_t>(s)] = -2;
        while (!q.empty() && via[static_cast<std::size_t>(t)] == -1) {
            int u = q.front();
            q.pop();
            for (int a = head_[static_cast<std::size_t>(u)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
                const Arc& arc = arcs_[static_cast<std::size_t>(a)];
                if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
                    via[static_cast<std::size_t>(arc.to)] = a;
                    q.push(arc.to);
                }
            }
        }
        if (via[static_cast<std::size_t>(t)] == -1) return false;
        for (int v = t; v != s;) {
            int a = via[static_cast<std::size_t>(v)];
            arcs_[static_cast<std::size_t>(a)].cap -= 1;
            arcs_[static_cast<std::size_t>(a ^ 1)].cap += 1;
            v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
        }
        return true;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

// Max number of internally vertex-disjoint s-t paths (s, t non-adjacent).
// Split every node w into w_in (2w) -> w_out (2w+1) with capacity 1, except
// the terminals which get infinite throughput.
int disjoint_paths(const DiGraph& g, int s, int t) {
    const int n = g.node_count();
    FlowNetwork net(2 * n);
    for (int w = 0; w < n; ++w)
        net.add_arc(2 * w, 2 * w + 1, (w == s || w == t) ? kInf : 1);
    for (auto [u, v] : g.edge_pairs()) net.add_arc(2 * u + 1, 2 * v, kInf);
    return net.max_flow(2 * s + 1, 2 * t, n);
}

}  // namespace

bool is_connected_undirected(const DiGraph& g) {
    const int n = g.node_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        auto visit = [&](int v) {
            if (!seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                q.push(v);
            }
        };
        for (int v : g.out_neighbors_of(u)) visit(v);
        for (int v : g.in_neighbors_of(u)) visit(v);
    }
    return count == n;
}

int vertex_connectivity(const DiGraph& g) {
    if (g.is_directed())
        throw std::invalid_argument("vertex_connectivity: directed input");
    const int n = g.node_count();
    if (n == 0) throw std::invalid_argument("vertex_connectivity: empty graph");
    if (!is_connected_undirected(g)) return 0;
    int best = n - 1;  // complete-graph convention: no vertex cut exists
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            best = std::min(best, disjoint_paths(g, s, t));
        }
    return best;
}

}  // namespace robustnet
