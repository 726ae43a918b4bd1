#include "robustnet/naive.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace robustnet::naive {

namespace {

constexpr int kNaiveLimit = 12;

void check_size(const DiGraph& g, const char* who) {
    if (g.node_count() > kNaiveLimit)
        throw std::invalid_argument(std::string(who) + ": naive oracle limited to n <= " +
                                    std::to_string(kNaiveLimit));
}

std::vector<int> members(const std::vector<int>& assignment, int label) {
    std::vector<int> out;
    for (std::size_t i = 0; i < assignment.size(); ++i)
        if (assignment[i] == label) out.push_back(static_cast<int>(i));
    return out;
}

bool subset_reachable(const DiGraph& g, const std::vector<int>& subset, int r) {
    for (int i : subset) {
        int outside = 0;
        for (int j : g.in_neighbors_of(i))
            if (std::find(subset.begin(), subset.end(), j) == subset.end()) ++outside;
        if (outside >= r) return true;
    }
    return false;
}

// Union-find-free connectivity check after deleting `removed` nodes.
bool connected_after_removal(const DiGraph& g, const std::vector<char>& removed) {
    const int n = g.node_count();
    int start = -1, alive = 0;
    for (int i = 0; i < n; ++i)
        if (!removed[static_cast<std::size_t>(i)]) {
            if (start < 0) start = i;
            ++alive;
        }
    if (alive <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v : g.in_neighbors_of(u)) {
            if (removed[static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)])
                continue;
            seen[static_cast<std::size_t>(v)] = 1;
            ++count;
            stack.push_back(v);
        }
    }
    return count == alive;
}

}  // namespace

bool r_reachable(const DiGraph& g, const NodeSet& s, int r) {
    if (r < 1) throw std::invalid_argument("naive::r_reachable: r must be >= 1");
    if (s.empty()) throw std::invalid_argument("naive::r_reachable: empty set");
    return subset_reachable(g, s.ids(), r);
}

bool r_robust(const DiGraph& g, int r) {
    if (r < 1) throw std::invalid_argument("naive::r_robust: r must be >= 1");
    check_size(g, "naive::r_robust");
    const int n = g.node_count();
    if (n <= 1) return true;
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    while (true) {
        const std::vector<int> s1 = members(assignment, 1);
        const std::vector<int> s2 = members(assignment, 2);
        if (!s1.empty() && !s2.empty() && !subset_reachable(g, s1, r) &&
            !subset_reachable(g, s2, r))
            return false;
        // next assignment in base 3
        int pos = 0;
        while (pos < n && assignment[static_cast<std::size_t>(pos)] == 2)
            assignment[static_cast<std::size_t>(pos)++] = 0;
        if (pos == n) break;
        ++assignment[static_cast<std::size_t>(pos)];
    }
    return true;
}

bool strongly_r_robust(const DiGraph& g, int r) {
    if (r < 1) throw std::invalid_argument("naive::strongly_r_robust: r must be >= 1");
    check_size(g, "naive::strongly_r_robust");
    const int n = g.node_count();
    std::vector<char> in_set(static_cast<std::size_t>(n), 0);
    while (true) {
        int pos = 0;
        while (pos < n && in_set[static_cast<std::size_t>(pos)])
            in_set[static_cast<std::size_t>(pos)++] = 0;
        if (pos == n) break;
        in_set[static_cast<std::size_t>(pos)] = 1;

        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (in_set[static_cast<std::size_t>(i)]) subset.push_back(i);
        if (subset_reachable(g, subset, r)) continue;
        bool covered = false;
        for (int i : subset) {
            bool covers = true;
            for (int u = 0; u < n && covers; ++u) {
                if (in_set[static_cast<std::size_t>(u)]) continue;
                covers = std::find(g.in_neighbors_of(i).begin(), g.in_neighbors_of(i).end(),
                                   u) != g.in_neighbors_of(i).end();
            }
            if (covers) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

int vertex_connectivity(const DiGraph& g) {
    if (g.is_directed())
        throw std::invalid_argument("naive::vertex_connectivity: directed input");
    check_size(g, "naive::vertex_connectivity");
    const int n = g.node_count();
    if (n == 0) throw std::invalid_argument("naive::vertex_connectivity: empty graph");
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int k = 0; k <= n - 2; ++k) {
        // all removal subsets of size k via combination walking
        std::vector<int> pick(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::fill(removed.begin(), removed.end(), 0);
            for (int i : pick) removed[static_cast<std::size_t>(i)] = 1;
            if (!connected_after_removal(g, removed)) return k;
            int pos = k - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
            if (pos < 0) break;
            ++pick[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < k; ++i)
                pick[static_cast<std::size_t>(i)] = pick[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return n - 1;
}

}  // namespace robustnet::naive
