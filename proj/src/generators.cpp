#include "robustnet/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace robustnet {

namespace {

void require_positive(int n, const char* what) {
    if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

void add_clique(DiGraph& g, const NodeSet& nodes) {
    for (int u : nodes)
        for (int v : nodes)
            if (u < v) g.add_edge(u, v);
}

}  // namespace

DiGraph generate_complete(int n) {
    require_positive(n, "generate_complete");
    DiGraph g(n, false);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

DiGraph generate_star(int n) {
    require_positive(n, "generate_star");
    DiGraph g(n, false);
    for (int leaf = 1; leaf < n; ++leaf) g.add_edge(0, leaf);
    return g;
}

NodeSet prop1_a_block(int n) {
    return NodeSet::range(n / 2);
}

NodeSet prop1_b_block(int n) {
    NodeSet b;
    for (int i = n / 2; i < n; ++i) b.insert(i);
    return b;
}

DiGraph prop1_graph(int n, int f) {
    if (f < 1) throw std::invalid_argument("prop1_graph: f must be >= 1");
    if (n < 2 * f + 2)
        throw std::invalid_argument("prop1_graph: n must be >= 2f+2");
    const int a_size = n / 2;
    const int b_size = n - a_size;
    DiGraph g(n, false);
    add_clique(g, prop1_a_block(n));
    add_clique(g, prop1_b_block(n));
    // Circulant bridge: a_i ~ b_i .. b_{i+f-1}, indices mod |B|. The f >= 1
    // wraparound matches the construction's "otherwise" branch for odd n.
    for (int i = 0; i < a_size; ++i)
        for (int k = 0; k < f; ++k) g.add_edge(i, a_size + (i + k) % b_size);
    return g;
}

Fig1Layout fig1_layout(int f) {
    if (f < 1) throw std::invalid_argument("fig1_tight_graph: f must be >= 1");
    Fig1Layout l;
    for (int i = 0; i < 2 * f; ++i) l.s1.insert(i);
    for (int i = 2 * f; i < 4 * f; ++i) l.s2a.insert(i);
    for (int i = 4 * f; i < 6 * f; ++i) l.s2b.insert(i);
    for (int i = 6 * f; i < 8 * f; ++i) l.s3.insert(i);
    l.a = 8 * f;
    l.b = 8 * f + 1;
    return l;
}

DiGraph fig1_tight_graph(int f) {
    const Fig1Layout l = fig1_layout(f);
    DiGraph g(8 * f + 2, true);
    auto join_undirected = [&g](int u, int v) {
        g.add_edge(u, v);
        g.add_edge(v, u);
    };
    auto clique = [&](const NodeSet& s) {
        for (int u : s)
            for (int v : s)
                if (u < v) join_undirected(u, v);
    };
    clique(l.s1);
    clique(l.s3);
    NodeSet s2;
    for (int v : l.s2a) s2.insert(v);
    for (int v : l.s2b) s2.insert(v);
    clique(s2);
    for (int u : l.s1)
        for (int v : l.s2a) join_undirected(u, v);
    for (int u : l.s3)
        for (int v : l.s2b) join_undirected(u, v);
    for (int u : l.s1) g.add_edge(u, l.a);
    for (int u : l.s3) g.add_edge(u, l.b);
    return g;
}

DiGraph prop4_graph() {
    DiGraph g(8, false);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
    for (int v : {1, 2, 3}) g.add_edge(5, v);
    for (int v : {2, 3, 4}) g.add_edge(6, v);
    for (int v : {2, 3, 5, 6}) g.add_edge(7, v);
    return g;
}

DiGraph generate_gnp(int n, double p, std::uint64_t seed, bool directed) {
    if (n < 0) throw std::invalid_argument("generate_gnp: negative n");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("generate_gnp: p outside [0,1]");
    std::mt19937_64 rng(seed);
    auto coin = [&rng, p] {
        return (static_cast<double>(rng() >> 11) * 0x1.0p-53) < p;
    };
    DiGraph g(n, directed);
    for (int u = 0; u < n; ++u)
        for (int v = directed ? 0 : u + 1; v < n; ++v) {
            if (u == v) continue;
            if (coin()) g.add_edge(u, v);
        }
    return g;
}

}  // namespace robustnet
