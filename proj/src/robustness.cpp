#include "robustnet/robustness.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <queue>
#include <stdexcept>
#include <string>

namespace robustnet {

namespace {

constexpr int kRobustDefaultLimit = 14;
constexpr int kStrongDefaultLimit = 20;

std::vector<std::uint64_t> in_masks(const DiGraph& g) {
    const int n = g.node_count();
    std::vector<std::uint64_t> m(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j : g.in_neighbors_of(i)) m[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    return m;
}

void check_exhaustive_size(const DiGraph& g, int default_limit, const char* who) {
    const int limit = exhaustive_node_limit(default_limit);
    if (g.node_count() > limit)
        throw std::invalid_argument(
            std::string(who) + ": n=" + std::to_string(g.node_count()) +
            " exceeds the exhaustive-enumeration limit " + std::to_string(limit) +
            " (set ROBUSTNET_MAX_EXHAUSTIVE_N to override)");
}

// True iff the subset `mask` contains a node with >= r in-neighbors outside it.
bool mask_r_reachable(const std::vector<std::uint64_t>& in, std::uint64_t mask, int r) {
    for (std::uint64_t rest = mask; rest;) {
        const int i = std::countr_zero(rest);
        rest &= rest - 1;
        if (std::popcount(in[static_cast<std::size_t>(i)] & ~mask) >= r) return true;
    }
    return false;
}

// nr[mask] = 1 for every nonempty subset that is NOT r-reachable.
std::vector<char> not_reachable_table(const DiGraph& g, int r) {
    const int n = g.node_count();
    const auto in = in_masks(g);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<char> nr(static_cast<std::size_t>(total), 0);
    for (std::uint64_t mask = 1; mask < total; ++mask)
        nr[static_cast<std::size_t>(mask)] = !mask_r_reachable(in, mask, r);
    return nr;
}

// has_nr[M] = 1 iff some nonempty submask of M is in nr.
std::vector<char> submask_closure(const std::vector<char>& nr, int n) {
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<char> has(static_cast<std::size_t>(total), 0);
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        if (nr[static_cast<std::size_t>(mask)]) {
            has[static_cast<std::size_t>(mask)] = 1;
            continue;
        }
        for (std::uint64_t rest = mask; rest;) {
            const std::uint64_t bit = rest & (~rest + 1);
            rest ^= bit;
            if (has[static_cast<std::size_t>(mask ^ bit)]) {
                has[static_cast<std::size_t>(mask)] = 1;
                break;
            }
        }
    }
    return has;
}

void validate_subset(const DiGraph& g, const NodeSet& s, const char* who) {
    for (int id : s)
        if (id < 0 || id >= g.node_count())
            throw std::out_of_range(std::string(who) + ": node " + std::to_string(id) +
                                    " not in graph");
}

}  // namespace

int exhaustive_node_limit(int default_limit) {
    int limit = default_limit;
    if (const char* env = std::getenv("ROBUSTNET_MAX_EXHAUSTIVE_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) limit = static_cast<int>(v);
    }
    return std::min(limit, 63);
}

bool is_r_reachable(const DiGraph& g, const NodeSet& s, int r) {
    if (r < 1) throw std::invalid_argument("is_r_reachable: r must be >= 1");
    if (s.empty()) throw std::invalid_argument("is_r_reachable: empty set");
    validate_subset(g, s, "is_r_reachable");
    for (int i : s) {
        int outside = 0;
        for (int j : g.in_neighbors_of(i))
            if (!s.contains(j)) ++outside;
        if (outside >= r) return true;
    }
    return false;
}

bool is_r_robust(const DiGraph& g, int r) {
    return !non_robust_witness(g, r).has_value();
}

std::optional<std::pair<NodeSet, NodeSet>> non_robust_witness(const DiGraph& g, int r) {
    if (r < 1) throw std::invalid_argument("is_r_robust: r must be >= 1");
    check_exhaustive_size(g, kRobustDefaultLimit, "is_r_robust");
    const int n = g.node_count();
    if (n <= 1) return std::nullopt;  // no nonempty disjoint pair exists

    const auto nr = not_reachable_table(g, r);
    const auto has = submask_closure(nr, n);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t s1 = 1; s1 <= full; ++s1) {
        if (!nr[static_cast<std::size_t>(s1)]) continue;
        std::uint64_t rest = full & ~s1;
        if (!rest || !has[static_cast<std::size_t>(rest)]) continue;
        // Recover an actual non-reachable submask of the complement.
        while (!nr[static_cast<std::size_t>(rest)]) {
            for (std::uint64_t bits = rest; bits;) {
                const std::uint64_t bit = bits & (~bits + 1);
                bits ^= bit;
                if (has[static_cast<std::size_t>(rest ^ bit)]) {
                    rest ^= bit;
                    break;
                }
            }
        }
        return std::make_pair(NodeSet::from_mask(s1), NodeSet::from_mask(rest));
    }
    return std::nullopt;
}

int max_robustness(const DiGraph& g) {
    if (g.node_count() <= 1) return 0;  // definition is vacuous; documented convention
    int r = 0;
    while (is_r_robust(g, r + 1)) ++r;  // monotone in r, bounded by ceil(n/2)
    return r;
}

bool is_strongly_r_robust(const DiGraph& g, int r) {
    if (r < 1) throw std::invalid_argument("is_strongly_r_robust: r must be >= 1");
    check_exhaustive_size(g, kStrongDefaultLimit, "is_strongly_r_robust");
    const int n = g.node_count();
    if (n == 0) return true;
    const auto in = in_masks(g);
    const std::uint64_t total = std::uint64_t{1} << n;
    const std::uint64_t full = total - 1;
    for (std::uint64_t mask = 1; mask < total; ++mask) {
        if (mask_r_reachable(in, mask, r)) continue;
        bool covered = false;
        const std::uint64_t outside = full & ~mask;
        for (std::uint64_t rest = mask; rest && !covered;) {
            const int i = std::countr_zero(rest);
            rest &= rest - 1;
            covered = (outside & ~in[static_cast<std::size_t>(i)]) == 0;
        }
        if (!covered) return false;
    }
    return true;
}

int max_strong_robustness(const DiGraph& g) {
    const int n = g.node_count();
    if (n <= 1) return 0;
    int r = 0;
    while (r < n && is_strongly_r_robust(g, r + 1)) ++r;
    return r;
}

bool is_f_local(const DiGraph& g, const NodeSet& s, int f) {
    if (f < 0) throw std::invalid_argument("is_f_local: f must be >= 0");
    validate_subset(g, s, "is_f_local");
    if (s.empty()) return true;
    for (int i = 0; i < g.node_count(); ++i) {
        if (s.contains(i)) continue;
        int inside = 0;
        for (int j : g.in_neighbors_of(i))
            if (s.contains(j) && ++inside > f) return false;
    }
    return true;
}

bool has_spanning_tree(const DiGraph& g) {
    const int n = g.node_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(seen.begin(), seen.end(), 0);
        std::queue<int> q;
        q.push(root);
        seen[static_cast<std::size_t>(root)] = 1;
        int count = 1;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : g.out_neighbors_of(u))
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    ++count;
                    q.push(v);
                }
        }
        if (count == n) return true;
    }
    return false;
}

std::vector<NodeSet> enumerate_f_local_sets(const DiGraph& g, int f,
                                            std::optional<int> excluded) {
    if (f < 0) throw std::invalid_argument("enumerate_f_local_sets: f must be >= 0");
    check_exhaustive_size(g, kStrongDefaultLimit, "enumerate_f_local_sets");
    const int n = g.node_count();
    const auto in = in_masks(g);
    std::uint64_t pool = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (excluded) {
        if (*excluded < 0 || *excluded >= n)
            throw std::out_of_range("enumerate_f_local_sets: excluded node out of range");
        pool &= ~(std::uint64_t{1} << *excluded);
    }
    std::vector<NodeSet> out;
    // iterate submasks of pool, ascending, empty set included
    std::uint64_t mask = 0;
    while (true) {
        bool ok = true;
        for (int i = 0; ok && i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) continue;
            if (std::popcount(in[static_cast<std::size_t>(i)] & mask) > f) ok = false;
        }
        if (ok) out.push_back(NodeSet::from_mask(mask));
        if (mask == pool) break;
        mask = (mask - pool) & pool;  // next submask in ascending order
    }
    return out;
}

}  // namespace robustnet
