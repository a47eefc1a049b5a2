#pragma once

#include <string>
#include <vector>

#include "regpow/graph.hpp"

namespace regpow {

enum class Method { Formula, Oracle, Both };

// One invariant in one power: the closed-form side (with its case branch),
// the oracle side, or both. Inapplicable closed forms show up as "n/a".
struct InvariantCell {
  std::string formula = "n/a";
  std::string branch;
  std::string oracle = "n/a";
  bool formula_ok = false;
  bool oracle_ok = false;
  bool match = true;  // meaningful only when both sides are present
};

struct InvariantsRow {
  int n = 0;
  InvariantCell a1, a2, greg, reg_symbolic, cm;
};

struct InvariantsTable {
  Method method = Method::Both;
  std::string graph_key;
  std::vector<InvariantsRow> rows;

  std::string render_text() const;
  std::string render_csv() const;
};

InvariantsTable run_invariants(const Graph& g, int n_max, Method method);

struct ClassifyReport {
  std::string graph_key;
  GraphProfile profile;
  std::string condition = "n/a";
  std::string condition_note;
  std::string matroid_exchange, matroid_fourcycle, matroid_obstruction;
  bool methods_agree = true;

  std::string render_text() const;
};

ClassifyReport run_classify(const Graph& g);

}  // namespace regpow
