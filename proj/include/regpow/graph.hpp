#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regpow/monomial_ideal.hpp"
#include "regpow/simplicial_complex.hpp"
#include "regpow/subsets.hpp"

namespace regpow {

// Simple undirected graph on vertices 1..r; loops and parallel edges are
// rejected, isolated vertices are allowed.
class Graph {
 public:
  Graph(int r, std::vector<std::pair<int, int>> edges);

  int r() const { return r_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const { return subset_size(adj_[v - 1]); }
  Subset neighbors(int v) const { return adj_[v - 1]; }
  Subset isolated_mask() const;
  int max_degree() const;
  bool connected() const;
  std::optional<int> diameter() const;  // nullopt when disconnected
  std::optional<int> girth() const;     // nullopt when acyclic
  bool in_triangle(int v) const;
  Subset compact_mask() const;  // vertices of degree >= 3 lying in a triangle
  // Some edge lies in two or more triangles (adjacent endpoints share at
  // least two neighbours).
  bool has_doubly_triangular_edge() const;

  Graph strip_isolated() const;
  // Induced subgraph; the i-th listed vertex becomes vertex i+1.
  Graph induced(const std::vector<int>& vertices) const;

  std::string str() const;

 private:
  int r_;
  std::vector<std::pair<int, int>> edges_;  // sorted, u < v
  std::vector<Subset> adj_;
};

Graph cycle_graph(int r);
Graph path_graph(int r);  // r vertices, r-1 edges
Graph complete_graph(int r);
Graph broom_graph();  // triangle on 1,2,3 with the pendant edge {3,4}

struct GraphProfile {
  std::optional<int> girth;
  std::optional<int> diameter;
  int max_degree = 0;
  bool connected = false;
  Subset compact_vertices = 0;
  Subset isolated_vertices = 0;
};

GraphProfile graph_profile(const Graph& g);

enum class ConditionLabel { C1, C2, C3, C4, C5 };
enum class C5Shape { None, SingleEdge, TwoEdgePath, Triangle, FourCycle, FiveCycle };

struct ConditionClass {
  ConditionLabel label;
  C5Shape shape;
  std::string str() const;
};

// The five-way classification driving the a_1 case table. Requires r >= 3 and
// no isolated vertices; exactly one label applies. C5 graphs are connected
// with maximum degree <= 2 and diameter <= 2, hence a short path or cycle;
// that includes the triangle alongside P2, C4 and C5.
ConditionClass condition_class(const Graph& g);

enum class MatroidMethod { Exchange, FourCycle, Obstruction };

// Matroid test for the one-dimensional complex of g. Exchange checks the
// augmentation property directly. FourCycle requires a graph without isolated
// vertices (with an isolated vertex the disjoint-edge criterion goes vacuous
// while exchange fails). Obstruction requires diameter <= 2 and looks for an
// induced broom or pentagon.
bool is_matroid(const Graph& g, MatroidMethod method);

MonomialIdeal edge_prime(int u, int v, int r);
MonomialIdeal stanley_reisner(const Graph& g);
// Intersection of the n-th powers of the facet primes of the one-complex
// (edges, plus a singleton facet for each isolated vertex).
MonomialIdeal symbolic_power(const Graph& g, int n);
SimplicialComplex one_complex(const Graph& g);
std::vector<Subset> complex_facets(const Graph& g);

}  // namespace regpow
