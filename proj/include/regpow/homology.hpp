#pragma once

#include <vector>

#include "regpow/simplicial_complex.hpp"

namespace regpow {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  long long& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  long long at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// Exact rank over the rationals via fraction-free (Bareiss) elimination.
// All arithmetic is integral; intermediates are minors of the input.
int exact_rank(IntMatrix m);

// Augmented oriented chain complex. faces[k] lists the (k-1)-dimensional
// faces, so faces[0] = {empty face}; each level is sorted lexicographically.
// boundaries[k] maps (k-1)-chains to (k-2)-chains, with the usual alternating
// signs; boundaries[1] is the augmentation onto the empty face.
struct ChainComplexData {
  std::vector<std::vector<Subset>> faces;
  std::vector<IntMatrix> boundaries;  // boundaries[0] is an empty matrix
  int top_dim() const { return static_cast<int>(faces.size()) - 2; }
};

ChainComplexData boundary_matrices(const SimplicialComplex& complex);

class HomologyDims {
 public:
  HomologyDims() = default;  // identically zero
  explicit HomologyDims(std::vector<int> dims_from_minus1) : d_(std::move(dims_from_minus1)) {}

  // Reduced homology dimension in degree j (j >= -1); zero outside range.
  int dim(int j) const {
    int idx = j + 1;
    if (idx < 0 || idx >= static_cast<int>(d_.size())) return 0;
    return d_[idx];
  }
  bool all_zero() const {
    for (int d : d_)
      if (d != 0) return false;
    return true;
  }
  friend bool operator==(const HomologyDims& a, const HomologyDims& b) { return a.d_ == b.d_; }

 private:
  std::vector<int> d_;
};

// Reduced simplicial homology dimensions over a field of characteristic zero.
// Every call re-verifies d o d = 0, the Euler characteristic identity and,
// for complexes of dimension <= 1, the component/circuit-rank closed forms;
// violations throw std::logic_error.
HomologyDims reduced_homology_dims(const SimplicialComplex& complex);

}  // namespace regpow
