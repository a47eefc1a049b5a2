#include "regpow/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace regpow {

namespace {

Graph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("graph file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("graph file: expected a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
    throw std::invalid_argument("graph file: field 'vertices' must be an integer");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw std::invalid_argument("graph file: field 'edges' must be a list of pairs");
  int r = doc["vertices"].get<int>();
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (const auto& e : doc["edges"]) {
    ++k;
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw std::invalid_argument("graph file: edge #" + std::to_string(k) +
                                  " must be a pair of integers");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  try {
    return Graph(r, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("graph file: ") + e.what());
  }
}

Graph parse_graph_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int r = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    if (r < 0) {
      if (!(fields >> r) || r < 1)
        throw std::invalid_argument("graph file: line " + std::to_string(lineno) +
                                    ": expected the vertex count");
      continue;
    }
    int u, v;
    if (!(fields >> u)) continue;  // blank line
    if (!(fields >> v))
      throw std::invalid_argument("graph file: line " + std::to_string(lineno) +
                                  ": expected 'u v'");
    std::string rest;
    if (fields >> rest)
      throw std::invalid_argument("graph file: line " + std::to_string(lineno) +
                                  ": trailing tokens");
    edges.push_back({u, v});
  }
  if (r < 0) throw std::invalid_argument("graph file: empty input");
  try {
    return Graph(r, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("graph file: ") + e.what());
  }
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_graph_json(text);
    break;
  }
  return parse_graph_edgelist(text);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("graph file: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

std::string serialize_graph_json(const Graph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.r();
  doc["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) doc["edges"].push_back({u, v});
  return doc.dump();
}

std::string serialize_graph_edgelist(const Graph& g) {
  std::ostringstream os;
  os << g.r() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

}  // namespace regpow
