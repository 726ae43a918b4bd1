#include "robustnet/cpa.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

#include "robustnet/connectivity.hpp"
#include "robustnet/robustness.hpp"

namespace robustnet {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Forged token for a faulty sender; never equals the broadcast value.
std::optional<Message> lie(const CpaAdversary& adv, int round, int sender, int receiver) {
    switch (adv.kind) {
        case CpaAdversary::Kind::Silent:
            return std::nullopt;
        case CpaAdversary::Kind::ConstantLie:
            return "FORGED" + (adv.byzantine ? "@" + std::to_string(receiver) : "");
        case CpaAdversary::Kind::RandomLie: {
            std::uint64_t h = mix64(adv.seed ^ mix64(static_cast<std::uint64_t>(round)));
            h = mix64(h ^ mix64(static_cast<std::uint64_t>(sender) + 0x100));
            if (adv.byzantine)
                h = mix64(h ^ mix64(static_cast<std::uint64_t>(receiver) + 0x10000));
            return "FORGED#" + std::to_string(h % 8);
        }
    }
    return std::nullopt;
}

std::vector<int> bfs_distances(const DiGraph& g, int s) {
    std::vector<int> dist(static_cast<std::size_t>(g.node_count()), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
        const int u = q.front();
        q.pop();
        for (int v : g.out_neighbors_of(u))
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                q.push(v);
            }
    }
    return dist;
}

void require_connected_undirected(const DiGraph& g, const char* who) {
    if (g.is_directed())
        throw std::invalid_argument(std::string(who) + ": directed input");
    if (!is_connected_undirected(g))
        throw std::invalid_argument(std::string(who) + ": disconnected graph");
}

}  // namespace

CpaResult cpa_run(const DiGraph& g, int source, int f, const NodeSet& malicious,
                  const CpaAdversary& adversary, const Message& value) {
    const int n = g.node_count();
    if (source < 0 || source >= n) throw std::out_of_range("cpa_run: source out of range");
    if (f < 0) throw std::invalid_argument("cpa_run: f must be >= 0");
    if (malicious.contains(source))
        throw std::invalid_argument("cpa_run: malicious source rejected");
    if (!is_f_local(g, malicious, f))
        throw std::invalid_argument("cpa_run: malicious set is not f-local");

    std::vector<std::optional<Message>> committed(static_cast<std::size_t>(n));
    committed[static_cast<std::size_t>(source)] = value;

    CpaResult result;
    result.log.push_back({0, source, value});

    // tally[i]: per candidate value, the distinct senders seen so far
    std::vector<std::map<Message, std::set<int>>> tally(static_cast<std::size_t>(n));

    for (int round = 1;; ++round) {
        std::vector<std::pair<int, Message>> commits;
        for (int i = 0; i < n; ++i) {
            if (malicious.contains(i) || committed[static_cast<std::size_t>(i)]) continue;
            bool direct_from_source = false;
            for (int j : g.in_neighbors_of(i)) {
                if (malicious.contains(j)) {
                    if (auto forged = lie(adversary, round, j, i))
                        tally[static_cast<std::size_t>(i)][*forged].insert(j);
                    continue;
                }
                if (!committed[static_cast<std::size_t>(j)]) continue;
                if (j == source) direct_from_source = true;
                tally[static_cast<std::size_t>(i)][*committed[static_cast<std::size_t>(j)]]
                    .insert(j);
            }
            if (direct_from_source) {
                commits.emplace_back(i, value);
                continue;
            }
            for (const auto& [msg, senders] : tally[static_cast<std::size_t>(i)]) {
                if (static_cast<int>(senders.size()) >= f + 1) {
                    commits.emplace_back(i, msg);
                    break;
                }
            }
        }
        if (commits.empty()) break;
        for (auto& [node, msg] : commits) {
            committed[static_cast<std::size_t>(node)] = msg;
            result.log.push_back({round, node, msg});
            if (msg != value) result.sound = false;
        }
        result.rounds = round;
    }

    int normal_count = 0;
    for (int i = 0; i < n; ++i) {
        if (malicious.contains(i)) continue;
        ++normal_count;
        const auto& c = committed[static_cast<std::size_t>(i)];
        if (c && *c == value) result.accepted.insert(i);
    }
    result.success = result.accepted.size() == normal_count;
    return result;
}

int x_metric(const DiGraph& g, int v, int s) {
    require_connected_undirected(g, "x_metric");
    const int n = g.node_count();
    if (v < 0 || v >= n || s < 0 || s >= n)
        throw std::out_of_range("x_metric: node out of range");
    const auto dist = bfs_distances(g, s);
    int closer = 0;
    for (int u : g.in_neighbors_of(v))
        if (dist[static_cast<std::size_t>(u)] < dist[static_cast<std::size_t>(v)]) ++closer;
    return closer;
}

std::optional<int> x_graph(const DiGraph& g) {
    require_connected_undirected(g, "x_graph");
    const int n = g.node_count();
    int best = std::numeric_limits<int>::max();
    bool found = false;
    for (int s = 0; s < n; ++s) {
        const auto dist = bfs_distances(g, s);
        for (int v = 0; v < n; ++v) {
            if (v == s || g.has_edge(v, s)) continue;
            found = true;
            int closer = 0;
            for (int u : g.in_neighbors_of(v))
                if (dist[static_cast<std::size_t>(u)] < dist[static_cast<std::size_t>(v)])
                    ++closer;
            best = std::min(best, closer);
        }
    }
    if (!found) return std::nullopt;
    return best;
}

CpaSufficiency cpa_sufficiency_report(const DiGraph& g, int f) {
    if (f < 0) throw std::invalid_argument("cpa_sufficiency_report: f must be >= 0");
    CpaSufficiency rep;
    rep.required_r = 2 * f + 1;
    rep.x_of_g = x_graph(g);
    rep.x_condition = !rep.x_of_g || *rep.x_of_g > 2 * f;
    rep.strongly_robust = is_strongly_r_robust(g, rep.required_r);
    return rep;
}

}  // namespace robustnet
