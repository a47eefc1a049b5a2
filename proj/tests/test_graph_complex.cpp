#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "regpow/graph.hpp"
#include "regpow/graph_enum.hpp"
#include "regpow/monomial_ideal.hpp"

using namespace regpow;

namespace {

// Brute-force minimal non-faces of the one-complex of g, an independent route
// to the Stanley-Reisner generators.
MonomialIdeal sr_by_minimal_nonfaces(const Graph& g) {
  const int r = g.r();
  std::set<Subset> faces;
  for (Subset f : one_complex(g).all_faces()) faces.insert(f);
  std::vector<Exponents> gens;
  for (Subset s = 1; s <= full_set(r); ++s) {
    if (faces.count(s)) continue;
    bool minimal = true;
    for (int v : subset_elements(s))
      if (!faces.count(s & ~singleton(v))) minimal = false;
    if (!minimal) continue;
    Exponents e(r, 0);
    for (int v : subset_elements(s)) e[v - 1] = 1;
    gens.push_back(e);
  }
  return MonomialIdeal(r, gens);
}

Graph two_disjoint_edges() { return Graph(4, {{1, 2}, {3, 4}}); }
Graph diamond() { return Graph(5, {{4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {5, 3}}); }
Graph star3() { return Graph(4, {{4, 1}, {4, 2}, {4, 3}}); }

}  // namespace

TEST_CASE("stanley_reisner generators") {
  CHECK(stanley_reisner(cycle_graph(3)) == MonomialIdeal(3, {{1, 1, 1}}));
  CHECK(stanley_reisner(Graph(3, {{1, 2}})) == MonomialIdeal(3, {{1, 0, 1}, {0, 1, 1}}));
  CHECK(stanley_reisner(cycle_graph(4)) == MonomialIdeal(4, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
  CHECK_THROWS_AS(stanley_reisner(Graph(3, {})), std::invalid_argument);
}

TEST_CASE("stanley_reisner equals both independent routes") {
  for (const Graph& g : {cycle_graph(3), cycle_graph(4), cycle_graph(5), broom_graph(),
                         two_disjoint_edges(), star3(), Graph(3, {{1, 2}}), complete_graph(4)}) {
    MonomialIdeal I = stanley_reisner(g);
    CHECK(I == sr_by_minimal_nonfaces(g));
    MonomialIdeal meet = MonomialIdeal::unit(g.r());
    for (Subset facet : complex_facets(g))
      meet = meet.intersect(MonomialIdeal::variable_prime(full_set(g.r()) & ~facet, g.r()));
    CHECK(I == meet);
  }
}

TEST_CASE("edge_prime") {
  CHECK(edge_prime(1, 2, 4) == MonomialIdeal(4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(edge_prime(1, 2, 3) == MonomialIdeal(3, {{0, 0, 1}}));
  CHECK(edge_prime(2, 3, 5) ==
        MonomialIdeal(5, {{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
}

TEST_CASE("symbolic_power") {
  CHECK(symbolic_power(cycle_graph(3), 2) == MonomialIdeal(3, {{2, 2, 2}}));
  for (const Graph& g : {cycle_graph(4), broom_graph(), star3(), Graph(3, {{1, 2}})})
    CHECK(symbolic_power(g, 1) == stanley_reisner(g));
  // the 4-cycle ideal is a complete intersection: ordinary = symbolic
  CHECK(symbolic_power(cycle_graph(4), 2) == stanley_reisner(cycle_graph(4)).power(2));
  // containment of the ordinary power at small n
  for (const Graph& g : {cycle_graph(5), broom_graph(), diamond()}) {
    for (int n = 1; n <= 3; ++n) {
      MonomialIdeal sym = symbolic_power(g, n);
      MonomialIdeal pw = stanley_reisner(g).power(n);
      for (const auto& gen : pw.generators()) CHECK(sym.contains(gen));
    }
  }
}

TEST_CASE("graph_profile") {
  GraphProfile p = graph_profile(cycle_graph(5));
  CHECK(p.girth == 5);
  CHECK(p.diameter == 2);
  CHECK(p.max_degree == 2);
  CHECK(p.connected);
  CHECK(p.compact_vertices == 0);

  GraphProfile broom = graph_profile(broom_graph());
  CHECK(broom.girth == 3);
  CHECK(broom.compact_vertices == subset_of({3}));

  GraphProfile two = graph_profile(two_disjoint_edges());
  CHECK_FALSE(two.girth.has_value());
  CHECK_FALSE(two.diameter.has_value());
  CHECK(two.max_degree == 1);
  CHECK_FALSE(two.connected);

  CHECK(graph_profile(Graph(3, {{1, 2}})).isolated_vertices == subset_of({3}));
}

TEST_CASE("condition_class") {
  CHECK(condition_class(complete_graph(4)).label == ConditionLabel::C1);
  CHECK(condition_class(broom_graph()).label == ConditionLabel::C1);
  CHECK(condition_class(diamond()).label == ConditionLabel::C2);
  CHECK(condition_class(star3()).label == ConditionLabel::C3);
  CHECK(condition_class(path_graph(4)).label == ConditionLabel::C4);
  CHECK(condition_class(two_disjoint_edges()).label == ConditionLabel::C4);

  CHECK(condition_class(path_graph(3)).shape == C5Shape::TwoEdgePath);
  CHECK(condition_class(cycle_graph(4)).shape == C5Shape::FourCycle);
  CHECK(condition_class(cycle_graph(5)).shape == C5Shape::FiveCycle);
  CHECK(condition_class(cycle_graph(3)).shape == C5Shape::Triangle);

  CHECK_THROWS_AS(condition_class(Graph(3, {{1, 2}})), std::invalid_argument);
  CHECK_THROWS_AS(condition_class(Graph(2, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("condition_class is total on isolate-free graphs") {
  for (int r = 3; r <= 5; ++r) {
    for (const Graph& g : enumerate_graphs(r, false, true)) {
      ConditionClass cc = condition_class(g);
      if (cc.label == ConditionLabel::C5) {
        CHECK(cc.shape != C5Shape::None);
        CHECK(g.max_degree() <= 2);
        CHECK(g.diameter().value_or(99) <= 2);
      }
    }
  }
}

TEST_CASE("is_matroid") {
  for (MatroidMethod m :
       {MatroidMethod::Exchange, MatroidMethod::FourCycle, MatroidMethod::Obstruction}) {
    CHECK(is_matroid(cycle_graph(4), m));
    CHECK(is_matroid(diamond(), m));
    CHECK(is_matroid(star3(), m));
    CHECK_FALSE(is_matroid(broom_graph(), m));
    CHECK_FALSE(is_matroid(cycle_graph(5), m));
  }
  CHECK_THROWS_AS(is_matroid(path_graph(4), MatroidMethod::Obstruction), std::invalid_argument);
  CHECK_THROWS_AS(is_matroid(Graph(3, {{1, 2}}), MatroidMethod::FourCycle), std::invalid_argument);
}

TEST_CASE("matroid criteria agree on isolate-free graphs up to 5 vertices") {
  for (int r = 3; r <= 5; ++r) {
    for (const Graph& g : enumerate_graphs(r, false, false)) {
      bool exchange = is_matroid(g, MatroidMethod::Exchange);
      CHECK(exchange == is_matroid(g, MatroidMethod::FourCycle));
      if (g.diameter().value_or(99) <= 2)
        CHECK(exchange == is_matroid(g, MatroidMethod::Obstruction));
    }
  }
}

TEST_CASE("link") {
  SimplicialComplex broom = one_complex(broom_graph());
  CHECK(broom.link(subset_of({3})) ==
        SimplicialComplex::from_facets(4, {subset_of({1}), subset_of({2}), subset_of({4})}));
  CHECK(SimplicialComplex::void_complex(4).link(subset_of({1})) ==
        SimplicialComplex::void_complex(4));
  CHECK(broom.link(subset_of({3, 4})).kind() == ComplexKind::Irrelevant);
  CHECK(broom.link(0) == broom);
}

TEST_CASE("pure_skeleton") {
  SimplicialComplex c = SimplicialComplex::from_facets(3, {subset_of({1, 2}), subset_of({3})});
  CHECK(c.pure_skeleton(1) == SimplicialComplex::from_facets(3, {subset_of({1, 2})}));
  CHECK(SimplicialComplex::from_facets(2, {subset_of({1, 2})}).pure_skeleton(0) ==
        SimplicialComplex::from_facets(2, {subset_of({1}), subset_of({2})}));
  CHECK(SimplicialComplex::irrelevant_complex(3).pure_skeleton(0).kind() == ComplexKind::Void);
}

TEST_CASE("enumerate_graphs counts") {
  CHECK(enumerate_graphs(3, false, true).size() == 2);  // two-edge path, triangle
  CHECK(enumerate_graphs(3, true, true).size() == 3);   // plus edge-with-isolated-vertex
  CHECK(enumerate_graphs(4, false, true).size() == 7);
  CHECK(enumerate_graphs(3, true, false).size() == 7);  // all labeled nonempty edge sets
}

TEST_CASE("canonical form is a relabeling invariant") {
  Graph a(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
  Graph b(5, {{3, 5}, {5, 2}, {2, 4}, {4, 1}, {1, 3}});  // same cycle, scrambled labels
  CHECK(isomorphic(a, b));
  CHECK(canonical_edge_mask(5, edge_mask(a)) == canonical_edge_mask(5, edge_mask(b)));
  CHECK_FALSE(isomorphic(a, path_graph(5)));
}

TEST_CASE("induced subgraph search") {
  CHECK(has_induced_subgraph(broom_graph(), broom_graph()));
  CHECK_FALSE(has_induced_subgraph(complete_graph(4), broom_graph()));
  CHECK(has_induced_subgraph(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}), cycle_graph(5)));
  CHECK_FALSE(has_induced_subgraph(complete_graph(5), cycle_graph(5)));
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Graph(4, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(4, {{1, 2}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(4, {{1, 5}}), std::invalid_argument);
}
