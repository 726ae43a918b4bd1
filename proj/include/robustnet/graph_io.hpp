#pragma once

#include <string>

#include <json.hpp>

#include "robustnet/graph.hpp"

namespace robustnet {

/// Text edge-list format. Header `<n> <count> directed|undirected`, then
/// `<from> <to>` per line. Undirected graphs carry each edge once as a
/// canonical (lo, hi) pair; directed graphs carry every ordered record.
std::string emit_edge_list(const DiGraph& g);
DiGraph parse_edge_list(const std::string& text);

/// JSON format: {"n": ..., "directed": ..., "edges": [[from, to], ...]} with
/// the same canonical edge records as the text format.
nlohmann::json emit_graph_json(const DiGraph& g);
DiGraph parse_graph_json(const nlohmann::json& j);

/// File helpers; a leading '{' selects the JSON format on read, and the
/// .json extension selects it on write.
DiGraph read_graph_file(const std::string& path);
void write_graph_file(const DiGraph& g, const std::string& path);

/// Write content to path via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace robustnet
