#include "regpow/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "regpow/graph_enum.hpp"

namespace regpow {

Graph::Graph(int r, std::vector<std::pair<int, int>> edges) : r_(r) {
  if (r < 1 || r > 31) throw std::invalid_argument("graph: vertex count out of range");
  adj_.assign(r, 0);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 1 || u > r || v < 1 || v > r)
      throw std::invalid_argument("graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("graph: loop edge");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw std::invalid_argument("graph: duplicate edge");
    adj_[u - 1] |= singleton(v);
    adj_[v - 1] |= singleton(u);
  }
  edges_.assign(seen.begin(), seen.end());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || u > r_ || v < 1 || v > r_ || u == v) return false;
  return subset_contains(adj_[u - 1], v);
}

Subset Graph::isolated_mask() const {
  Subset s = 0;
  for (int v = 1; v <= r_; ++v)
    if (adj_[v - 1] == 0) s |= singleton(v);
  return s;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 1; v <= r_; ++v) d = std::max(d, degree(v));
  return d;
}

namespace {

// BFS distances from src; -1 marks unreachable. An edge can be suppressed.
std::vector<int> bfs_dist(const Graph& g, int src, int ban_u = 0, int ban_v = 0) {
  std::vector<int> dist(g.r() + 1, -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : subset_elements(g.neighbors(u))) {
      if ((u == ban_u && v == ban_v) || (u == ban_v && v == ban_u)) continue;
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

bool Graph::connected() const {
  auto dist = bfs_dist(*this, 1);
  for (int v = 1; v <= r_; ++v)
    if (dist[v] < 0) return false;
  return true;
}

std::optional<int> Graph::diameter() const {
  int diam = 0;
  for (int u = 1; u <= r_; ++u) {
    auto dist = bfs_dist(*this, u);
    for (int v = 1; v <= r_; ++v) {
      if (dist[v] < 0) return std::nullopt;
      diam = std::max(diam, dist[v]);
    }
  }
  return diam;
}

std::optional<int> Graph::girth() const {
  std::optional<int> best;
  for (auto [u, v] : edges_) {
    auto dist = bfs_dist(*this, u, u, v);
    if (dist[v] >= 0) {
      int cycle = dist[v] + 1;
      if (!best || cycle < *best) best = cycle;
    }
  }
  return best;
}

bool Graph::in_triangle(int v) const {
  for (auto [a, b] : edges_)
    if (subset_contains(adj_[v - 1], a) && subset_contains(adj_[v - 1], b)) return true;
  return false;
}

Subset Graph::compact_mask() const {
  Subset s = 0;
  for (int v = 1; v <= r_; ++v)
    if (degree(v) >= 3 && in_triangle(v)) s |= singleton(v);
  return s;
}

bool Graph::has_doubly_triangular_edge() const {
  for (auto [u, v] : edges_)
    if (subset_size(adj_[u - 1] & adj_[v - 1]) >= 2) return true;
  return false;
}

Graph Graph::strip_isolated() const {
  std::vector<int> keep;
  for (int v = 1; v <= r_; ++v)
    if (adj_[v - 1] != 0) keep.push_back(v);
  return induced(keep);
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> newlabel(r_ + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) newlabel[vertices[i]] = static_cast<int>(i) + 1;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : edges_)
    if (newlabel[u] && newlabel[v]) edges.push_back({newlabel[u], newlabel[v]});
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

std::string Graph::str() const {
  std::ostringstream os;
  os << "r" << r_ << ":";
  bool first = true;
  for (auto [u, v] : edges_) {
    if (!first) os << ",";
    first = false;
    os << u << "-" << v;
  }
  return os.str();
}

Graph cycle_graph(int r) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < r; ++v) edges.push_back({v, v + 1});
  edges.push_back({r, 1});
  return Graph(r, std::move(edges));
}

Graph path_graph(int r) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < r; ++v) edges.push_back({v, v + 1});
  return Graph(r, std::move(edges));
}

Graph complete_graph(int r) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= r; ++u)
    for (int v = u + 1; v <= r; ++v) edges.push_back({u, v});
  return Graph(r, std::move(edges));
}

Graph broom_graph() { return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}); }

GraphProfile graph_profile(const Graph& g) {
  GraphProfile p;
  p.girth = g.girth();
  p.diameter = g.diameter();
  p.max_degree = g.max_degree();
  p.connected = g.connected();
  p.compact_vertices = g.compact_mask();
  p.isolated_vertices = g.isolated_mask();
  return p;
}

std::string ConditionClass::str() const {
  switch (label) {
    case ConditionLabel::C1:
      return "C1";
    case ConditionLabel::C2:
      return "C2";
    case ConditionLabel::C3:
      return "C3";
    case ConditionLabel::C4:
      return "C4";
    case ConditionLabel::C5:
      switch (shape) {
        case C5Shape::SingleEdge:
          return "C5[P1]";
        case C5Shape::TwoEdgePath:
          return "C5[P2]";
        case C5Shape::Triangle:
          return "C5[C3]";
        case C5Shape::FourCycle:
          return "C5[C4]";
        case C5Shape::FiveCycle:
          return "C5[C5]";
        case C5Shape::None:
          break;
      }
      return "C5";
  }
  return "?";
}

ConditionClass condition_class(const Graph& g) {
  if (g.r() < 3) throw std::invalid_argument("condition class: need at least 3 vertices");
  if (g.isolated_mask() != 0)
    throw std::invalid_argument("condition class: isolated vertices not allowed");

  if (g.compact_mask() != 0) return {ConditionLabel::C1, C5Shape::None};

  for (int p = 1; p <= g.r(); ++p) {
    for (int q = p + 1; q <= g.r(); ++q) {
      if (g.has_edge(p, q)) continue;
      if (subset_size(g.neighbors(p) & g.neighbors(q)) >= 3)
        return {ConditionLabel::C2, C5Shape::None};
    }
  }

  if (g.max_degree() >= 3) return {ConditionLabel::C3, C5Shape::None};

  auto diam = g.diameter();
  if (!diam || *diam >= 3) return {ConditionLabel::C4, C5Shape::None};

  // Connected with maximum degree <= 2 and diameter <= 2: a short path or cycle.
  if (g.edge_count() == g.r()) {
    switch (g.r()) {
      case 3:
        return {ConditionLabel::C5, C5Shape::Triangle};
      case 4:
        return {ConditionLabel::C5, C5Shape::FourCycle};
      case 5:
        return {ConditionLabel::C5, C5Shape::FiveCycle};
      default:
        break;
    }
  }
  if (g.edge_count() == g.r() - 1 && g.r() == 3)
    return {ConditionLabel::C5, C5Shape::TwoEdgePath};
  throw std::logic_error("condition class: unclassified C5 graph " + g.str());
}

bool is_matroid(const Graph& g, MatroidMethod method) {
  switch (method) {
    case MatroidMethod::Exchange: {
      std::vector<Subset> faces = one_complex(g).all_faces();
      std::set<Subset> lookup(faces.begin(), faces.end());
      for (Subset f : faces) {
        for (Subset h : faces) {
          if (subset_size(f) >= subset_size(h)) continue;
          bool extends = false;
          for (int x : subset_elements(h & ~f)) {
            if (lookup.count(f | singleton(x))) {
              extends = true;
              break;
            }
          }
          if (!extends) return false;
        }
      }
      return true;
    }
    case MatroidMethod::FourCycle: {
      if (g.isolated_mask() != 0 && g.edge_count() > 0)
        throw std::invalid_argument("matroid 4-cycle test: isolated vertices not allowed");
      const auto& edges = g.edges();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
          auto [a, b] = edges[i];
          auto [c, d] = edges[j];
          if (a == c || a == d || b == c || b == d) continue;
          bool in_square = (g.has_edge(b, c) && g.has_edge(d, a)) ||
                           (g.has_edge(b, d) && g.has_edge(c, a));
          if (!in_square) return false;
        }
      }
      return true;
    }
    case MatroidMethod::Obstruction: {
      auto diam = g.diameter();
      if (!diam || *diam > 2)
        throw std::invalid_argument("matroid obstruction test: diameter must be at most 2");
      return !has_induced_subgraph(g, broom_graph()) &&
             !has_induced_subgraph(g, cycle_graph(5));
    }
  }
  return false;
}

MonomialIdeal edge_prime(int u, int v, int r) {
  if (u < 1 || v < 1 || u > r || v > r || u == v)
    throw std::invalid_argument("edge prime: bad edge");
  return MonomialIdeal::variable_prime(full_set(r) & ~(singleton(u) | singleton(v)), r);
}

MonomialIdeal stanley_reisner(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("Stanley-Reisner ideal: graph needs at least one edge");
  const int r = g.r();
  std::vector<Exponents> gens;
  for (int u = 1; u <= r; ++u) {
    for (int v = u + 1; v <= r; ++v) {
      if (g.has_edge(u, v)) continue;
      Exponents e(r, 0);
      e[u - 1] = e[v - 1] = 1;
      gens.push_back(std::move(e));
    }
  }
  for (int u = 1; u <= r; ++u) {
    for (int v = u + 1; v <= r; ++v) {
      for (int w = v + 1; w <= r; ++w) {
        if (!(g.has_edge(u, v) && g.has_edge(u, w) && g.has_edge(v, w))) continue;
        Exponents e(r, 0);
        e[u - 1] = e[v - 1] = e[w - 1] = 1;
        gens.push_back(std::move(e));
      }
    }
  }
  return MonomialIdeal(r, std::move(gens));
}

std::vector<Subset> complex_facets(const Graph& g) {
  std::vector<Subset> facets;
  for (auto [u, v] : g.edges()) facets.push_back(singleton(u) | singleton(v));
  for (int v : subset_elements(g.isolated_mask())) facets.push_back(singleton(v));
  return facets;
}

MonomialIdeal symbolic_power(const Graph& g, int n) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("symbolic power: graph needs at least one edge");
  if (n < 1) throw std::invalid_argument("symbolic power: n must be positive");
  const int r = g.r();
  MonomialIdeal acc = MonomialIdeal::unit(r);
  for (Subset facet : complex_facets(g)) {
    MonomialIdeal prime = MonomialIdeal::variable_prime(full_set(r) & ~facet, r);
    acc = acc.intersect(prime.power(n));
  }
  return acc;
}

SimplicialComplex one_complex(const Graph& g) {
  std::vector<Subset> facets = complex_facets(g);
  if (facets.empty()) return SimplicialComplex::irrelevant_complex(g.r());
  return SimplicialComplex::from_facets(g.r(), facets);
}

}  // namespace regpow
