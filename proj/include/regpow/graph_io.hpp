#pragma once

#include <string>

#include "regpow/graph.hpp"

namespace regpow {

// Two accepted formats, sniffed by the first nonspace character:
//  - JSON object {"vertices": r, "edges": [[u,v], ...]}, 1-indexed
//  - edge list: first nonempty line r, then one "u v" pair per line
// Malformed input raises std::invalid_argument with a location diagnostic.
Graph parse_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);

std::string serialize_graph_json(const Graph& g);
std::string serialize_graph_edgelist(const Graph& g);

}  // namespace regpow
