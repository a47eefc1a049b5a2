#pragma once

#include <string>
#include <vector>

#include "regpow/graph.hpp"

namespace regpow {

struct VerifyOptions {
  int max_vertices = 5;
  int max_n = 2;
  bool include_isolated = false;
  bool dedupe = false;
  int workers = 1;
};

struct CaseRecord {
  std::string graph;   // canonical edge-list key
  int n = 0;
  std::string check;   // row name
  std::string lhs;     // closed form / first route
  std::string branch;  // case row applied, when meaningful
  std::string rhs;     // enumeration oracle / second route
  bool applicable = true;
  bool match = true;
};

struct VerificationReport {
  VerifyOptions options;
  std::vector<CaseRecord> records;
  int graphs = 0;
  int cases = 0;
  long long mismatches = 0;
  double wall_seconds = 0;  // not rendered: reports stay byte-identical

  std::string render_text() const;
  std::string render_csv() const;
};

// The exhaustive closed-form-versus-oracle sweep over all graphs with at
// least one edge on 3..max_vertices vertices, n = 1..max_n. Each case also
// re-derives the facet structure of every degree complex from the edge and
// isolated-vertex characterizations, checks the link-transfer identity on
// negative multidegrees, and cross-checks the two degree-complex routes.
// Output is deterministic and independent of the worker count.
VerificationReport run_verify(const VerifyOptions& options);

// One case worth of rows; exposed for the report and acceptance tooling.
std::vector<CaseRecord> evaluate_case(const Graph& g, int n);

}  // namespace regpow
