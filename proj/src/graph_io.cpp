#include "robustnet/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace robustnet {

namespace {

std::vector<std::pair<int, int>> canonical_records(const DiGraph& g) {
    return g.is_directed() ? g.edge_pairs() : g.undirected_edge_pairs();
}

}  // namespace

std::string emit_edge_list(const DiGraph& g) {
    const auto records = canonical_records(g);
    std::ostringstream out;
    out << g.node_count() << ' ' << records.size() << ' '
        << (g.is_directed() ? "directed" : "undirected") << '\n';
    for (auto [from, to] : records) out << from << ' ' << to << '\n';
    return out.str();
}

DiGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    int n = 0;
    std::size_t count = 0;
    std::string mode;
    if (!(in >> n >> count >> mode))
        throw std::invalid_argument("graph parse: bad header (want `n count directed|undirected`)");
    bool directed = false;
    if (mode == "directed")
        directed = true;
    else if (mode != "undirected")
        throw std::invalid_argument("graph parse: mode must be directed or undirected");
    DiGraph g(n, directed);
    for (std::size_t k = 0; k < count; ++k) {
        int from = 0, to = 0;
        if (!(in >> from >> to))
            throw std::invalid_argument("graph parse: expected " + std::to_string(count) +
                                        " edge lines, got " + std::to_string(k));
        g.add_edge(from, to);
    }
    return g;
}

nlohmann::json emit_graph_json(const DiGraph& g) {
    nlohmann::json j;
    j["n"] = g.node_count();
    j["directed"] = g.is_directed();
    auto edges = nlohmann::json::array();
    for (auto [from, to] : canonical_records(g)) edges.push_back({from, to});
    j["edges"] = std::move(edges);
    return j;
}

DiGraph parse_graph_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph parse: JSON needs fields n, edges");
    DiGraph g(j.at("n").get<int>(), j.value("directed", false));
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph parse: edge records must be [from, to]");
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return g;
}

DiGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw std::invalid_argument("graph parse: empty file: " + path);
    if (text[first] == '{') return parse_graph_json(nlohmann::json::parse(text));
    return parse_edge_list(text);
}

void write_graph_file(const DiGraph& g, const std::string& path) {
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        write_file_atomic(path, emit_graph_json(g).dump(2) + "\n");
    else
        write_file_atomic(path, emit_edge_list(g));
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write file: " + tmp);
        out << content;
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("rename failed: " + path);
}

}  // namespace robustnet
