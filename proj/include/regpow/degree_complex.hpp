#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "regpow/homology.hpp"
#include "regpow/invariant_value.hpp"
#include "regpow/monomial_ideal.hpp"
#include "regpow/simplicial_complex.hpp"

namespace regpow {

// A multidegree a in Z^r with its negative support G_a and nonnegative part.
struct DegreeVector {
  std::vector<int> entries;

  DegreeVector() = default;
  explicit DegreeVector(std::vector<int> e) : entries(std::move(e)) {}

  int size() const { return static_cast<int>(entries.size()); }
  Subset neg_support() const;
  Exponents pos_part() const;
  long long total() const;
  std::string str() const;
};

// The degree complex of I at a: all F inside the complement of G_a such that
// x^{a+} stays outside the monomial localization I[F u G_a] re-extended to S.
// Membership is decided by the generator-degree test: for every generator u
// some coordinate outside F u G_a has a_i < deg_i(u).
SimplicialComplex degree_complex(const MonomialIdeal& I, const DegreeVector& a);

// Same complex computed literally through localize(); kept as an independent
// route for cross-checking.
SimplicialComplex degree_complex_localized(const MonomialIdeal& I, const DegreeVector& a);

// The gate of the graded piece formula: G_a must avoid the radical, i.e.
// x_{G_a} not in sqrt(I). When the gate fails the degree complex is void.
bool takayama_gate(const MonomialIdeal& I, const DegreeVector& a);

// dim_K of the local cohomology piece H^i_m(S/I)_a, i >= 0.
int lc_piece_dim(const MonomialIdeal& I, int i, const DegreeVector& a);

// All a_i-invariants of S/I at once, with the refinement by |G_a|.
class AiTable {
 public:
  int nvars = 0;
  std::vector<int> caps;
  long long domain_points = 0;

  InvariantValue ai(int i) const;
  InvariantValue ai_j(int i, int j) const;
  InvariantValue greg() const;  // max of a_i + i over i >= 1
  InvariantValue reg() const;   // max of a_i + i over i >= 0

  std::vector<InvariantValue> by_i;                       // index i = 0..nvars
  std::map<std::pair<int, int>, InvariantValue> by_ij;    // (i, |G_a|)
};

using DomainObserver =
    std::function<void(const DegreeVector&, const SimplicialComplex&, const HomologyDims&)>;

// Enumerates the finite degree domain prod_i {-1, 0, ..., D_i} where D_i is
// the largest exponent of x_i over the generators. The complex depends on a
// only through G_a and min(a_i, D_i), so one negative representative per
// coordinate suffices, and graded pieces must vanish whenever a coordinate
// sits at its cap; that vanishing is asserted on every sweep.
AiTable ai_table(const MonomialIdeal& I, const DomainObserver& observer = {});

InvariantValue ai_oracle(const MonomialIdeal& I, int i);
InvariantValue ai_j_oracle(const MonomialIdeal& I, int i, int j);
InvariantValue greg_oracle(const MonomialIdeal& I);
InvariantValue reg_oracle(const MonomialIdeal& I);

}  // namespace regpow
