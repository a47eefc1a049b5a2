#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "regpow/graph.hpp"
#include "regpow/invariant_value.hpp"

namespace regpow {

// Signals a case the closed-form recursion deliberately does not cover.
class FormulaInapplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct FormulaResult {
  InvariantValue value;
  std::string branch;  // the case row that produced the value
};

// Closed forms for a_1, a_2 and the geometric regularity of S/I_G^n, for
// graphs on r >= 3 vertices with at least one edge. Isolated vertices are
// handled for a_1/a_2 by peeling them off through the cone recursion; the
// g-reg table covers them directly.
FormulaResult a1_formula(const Graph& g, int n);
FormulaResult a2_formula(const Graph& g, int n);
FormulaResult greg_formula(const Graph& g, int n);

// Cone recursion for J = (I, x_1 y, ..., x_r y) in S[y]:
//   a_i(R/J^n) = max{ a_i(S/I^{n-t}) + t : 0 <= t <= n-1 }          (i >= 2)
//   a_1(R/J^n) = max{ 2n-2, a_1(S/I^{n-t}) + t : 0 <= t <= n-1 }    (sqrt I != m)
// base maps the power m (1..n) to a_i(S/I^m). With i = 1 and full radical
// the recursion fails (the maximal-ideal-squared example) and we refuse.
InvariantValue cone_extend(const std::map<int, InvariantValue>& base, int i, int n,
                           bool has_full_radical);

// g-reg after appending k polynomial variables to the ideal:
//   g-reg(S[y]/(I,y)^n) = max{ g-reg(S/I^i) + n - i : 1 <= i <= n }.
InvariantValue add_polynomial_variables(const std::map<int, InvariantValue>& base_greg, int k,
                                        int n);

// sqrt(I) = (x_1,...,x_r)?
bool has_full_radical(const MonomialIdeal& I);

// J = (I, x_1 y, ..., x_r y) in one extra variable; adding an isolated vertex
// to a graph turns its Stanley-Reisner ideal into exactly this shape.
MonomialIdeal cone_ideal(const MonomialIdeal& base);

// Cohen-Macaulayness of S/I_G^n for isolate-free graphs on r >= 3 vertices.
// For n = 1 this is connectivity of G; for n >= 2 the quotient is
// Cohen-Macaulay exactly for the triangle, the two-edge path and the 4-cycle
// (any n), and the 5-cycle at n = 2. The triangle rows follow from I_G being
// principal there (a hypersurface ring).
bool is_cm(const Graph& g, int n);

}  // namespace regpow
