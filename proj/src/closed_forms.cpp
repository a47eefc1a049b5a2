#include "regpow/closed_forms.hpp"

#include <vector>

#include "regpow/graph_enum.hpp"

namespace regpow {

namespace {

void require_formula_domain(const Graph& g) {
  if (g.r() < 3) throw std::invalid_argument("formula: need at least 3 vertices");
  if (g.edge_count() == 0) throw std::invalid_argument("formula: graph needs at least one edge");
}

FormulaResult a1_base_value(const Graph& g0, int m) {
  if (m == 1) {
    if (g0.connected()) return {InvariantValue::neg_inf(), "n=1,connected:-inf"};
    return {InvariantValue::of(0), "n=1,disconnected:0"};
  }
  ConditionClass cc = condition_class(g0);
  switch (cc.label) {
    case ConditionLabel::C1:
      // Two adjacent vertices sharing two neighbours can be made isolated in
      // the degree complex simultaneously, with total degree 3n-2 at the
      // weight (n-1, n-1) on the edge and n spread over two shared
      // neighbours. Without such an edge the adjacent-pair configuration
      // loses one degree and the broom-type witness with 3n-3 is sharp.
      if (g0.has_doubly_triangular_edge())
        return {InvariantValue::of(3LL * m - 2), "C1,edge-in-2-triangles:3n-2"};
      return {InvariantValue::of(3LL * m - 3), "C1:3n-3"};
    case ConditionLabel::C2:
      return {InvariantValue::of(2LL * m - 1), "C2:2n-1"};
    case ConditionLabel::C3:
      return {InvariantValue::of(2LL * m - 2), "C3:2n-2"};
    case ConditionLabel::C4:
      return {InvariantValue::of(2LL * m - 2), "C4:2n-2"};
    case ConditionLabel::C5:
      switch (cc.shape) {
        case C5Shape::TwoEdgePath:
          return {InvariantValue::neg_inf(), "C5[P2]:-inf"};
        case C5Shape::FourCycle:
          return {InvariantValue::neg_inf(), "C5[C4]:-inf"};
        case C5Shape::Triangle:
          // principal Stanley-Reisner ideal, so every power is a hypersurface
          return {InvariantValue::neg_inf(), "C5[C3]:-inf"};
        case C5Shape::FiveCycle:
          if (m == 2) return {InvariantValue::neg_inf(), "C5[C5],n=2:-inf"};
          return {InvariantValue::of(2LL * m - 2), "C5[C5],n>=3:2n-2"};
        default:
          break;
      }
      break;
  }
  throw std::logic_error("a1 base: unreachable class");
}

FormulaResult a2_base_value(const Graph& g0, int m) {
  auto girth = g0.girth();
  if (girth) {
    if (*girth == 3) return {InvariantValue::of(3LL * m - 3), "girth3:3n-3"};
    if (*girth == 4) return {InvariantValue::of(2LL * m - 2), "girth4:2n-2"};
    if (m == 1) return {InvariantValue::of(0), "girth>=5,n=1:0"};
    return {InvariantValue::of(2LL * m - 3), "girth>=5:2n-3"};
  }
  if (g0.max_degree() >= 2) return {InvariantValue::of(2LL * m - 3), "forest,deg>=2:2n-3"};
  return {InvariantValue::of(1LL * m - 3), "deg1:n-3"};
}

// Strips isolated vertices and produces the a_i table of the remaining graph
// for powers 1..n, then reattaches the isolated vertices one at a time via
// the cone recursion. A bare edge is the Stanley-Reisner complex of the zero
// ideal, so its quotient is the polynomial ring itself: a_1 is -inf for every
// power and a_2 is the a-invariant -2 of a two-variable polynomial ring.
FormulaResult peeled_formula(const Graph& g, int n, int i,
                             FormulaResult (*base_value)(const Graph&, int),
                             const char* free_branch) {
  require_formula_domain(g);
  if (n < 1) throw std::invalid_argument("formula: n must be positive");

  Graph g0 = g.strip_isolated();
  const int isolated = g.r() - g0.r();

  std::map<int, InvariantValue> table;
  std::string branch;
  if (g0.r() == 2) {
    for (int m = 1; m <= n; ++m) table[m] = (i == 1) ? InvariantValue::neg_inf()
                                                     : InvariantValue::of(-2);
    branch = free_branch;
  } else {
    for (int m = 1; m <= n; ++m) {
      FormulaResult res = base_value(g0, m);
      table[m] = res.value;
      if (m == n) branch = res.branch;
    }
  }

  for (int k = 0; k < isolated; ++k) {
    std::map<int, InvariantValue> next;
    for (int m = 1; m <= n; ++m) next[m] = cone_extend(table, i, m, false);
    table = std::move(next);
  }
  if (isolated > 0) branch += "+cone^" + std::to_string(isolated);
  return {table.at(n), branch};
}

}  // namespace

FormulaResult a1_formula(const Graph& g, int n) {
  return peeled_formula(g, n, 1, &a1_base_value, "edge-base:-inf");
}

FormulaResult a2_formula(const Graph& g, int n) {
  return peeled_formula(g, n, 2, &a2_base_value, "edge-base:-2");
}

FormulaResult greg_formula(const Graph& g, int n) {
  require_formula_domain(g);
  if (n < 1) throw std::invalid_argument("formula: n must be positive");
  if (g.max_degree() == 1) return {InvariantValue::of(2LL * n - 1), "deg1:2n-1"};
  auto girth = g.girth();
  if (!girth) return {InvariantValue::of(2LL * n - 1), "forest,deg>=2:2n-1"};
  if (*girth == 3) return {InvariantValue::of(3LL * n - 1), "girth3:3n-1"};
  if (*girth == 4) return {InvariantValue::of(2LL * n), "girth4:2n"};
  if (n == 1) return {InvariantValue::of(2), "girth>=5,n=1:2"};
  return {InvariantValue::of(2LL * n - 1), "girth>=5:2n-1"};
}

InvariantValue cone_extend(const std::map<int, InvariantValue>& base, int i, int n,
                           bool has_full_radical) {
  if (n < 1) throw std::invalid_argument("cone_extend: n must be positive");
  if (i <= 0) throw std::invalid_argument("cone_extend: only i >= 1 is covered");
  if (i == 1 && has_full_radical)
    throw FormulaInapplicable(
        "cone_extend: a_1 recursion needs sqrt(I) != (x_1,...,x_r)");
  InvariantValue best = (i == 1) ? InvariantValue::of(2LL * n - 2) : InvariantValue::neg_inf();
  for (int t = 0; t <= n - 1; ++t) {
    auto it = base.find(n - t);
    if (it == base.end()) throw std::invalid_argument("cone_extend: base table missing a power");
    best.raise_to(it->second + t);
  }
  return best;
}

InvariantValue add_polynomial_variables(const std::map<int, InvariantValue>& base_greg, int k,
                                        int n) {
  if (n < 1) throw std::invalid_argument("add_polynomial_variables: n must be positive");
  if (k < 0) throw std::invalid_argument("add_polynomial_variables: negative variable count");
  std::map<int, InvariantValue> cur = base_greg;
  for (int m = 1; m <= n; ++m)
    if (!cur.count(m)) throw std::invalid_argument("add_polynomial_variables: base incomplete");
  for (int rep = 0; rep < k; ++rep) {
    std::map<int, InvariantValue> next;
    for (int m = 1; m <= n; ++m) {
      InvariantValue best = InvariantValue::neg_inf();
      for (int i = 1; i <= m; ++i) best.raise_to(cur.at(i) + (m - i));
      next[m] = best;
    }
    cur = std::move(next);
  }
  return cur.at(n);
}

MonomialIdeal cone_ideal(const MonomialIdeal& base) {
  const int r = base.nvars();
  std::vector<Exponents> gens;
  for (Exponents g : base.generators()) {
    g.push_back(0);
    gens.push_back(std::move(g));
  }
  for (int i = 0; i < r; ++i) {
    Exponents e(r + 1, 0);
    e[i] = 1;
    e[r] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(r + 1, std::move(gens));
}

bool has_full_radical(const MonomialIdeal& I) {
  MonomialIdeal rad = I.radical();
  for (int i = 0; i < I.nvars(); ++i) {
    Exponents v(I.nvars(), 0);
    v[i] = 1;
    if (!rad.contains(v)) return false;
  }
  return true;
}

bool is_cm(const Graph& g, int n) {
  if (g.r() < 3) throw std::invalid_argument("is_cm: need at least 3 vertices");
  if (g.isolated_mask() != 0) throw std::invalid_argument("is_cm: isolated vertices not allowed");
  if (g.edge_count() == 0) throw std::invalid_argument("is_cm: graph needs at least one edge");
  if (n < 1) throw std::invalid_argument("is_cm: n must be positive");
  if (n == 1) return g.connected();
  if (isomorphic(g, cycle_graph(3)) || isomorphic(g, path_graph(3)) ||
      isomorphic(g, cycle_graph(4)))
    return true;
  if (isomorphic(g, cycle_graph(5))) return n == 2;
  return false;
}

}  // namespace regpow
