#pragma once

#include <string>
#include <vector>

#include "regpow/subsets.hpp"

namespace regpow {

// The void complex (no faces at all) and the irrelevant complex (only the
// empty face) are distinct: they differ in reduced homology at dimension -1.
enum class ComplexKind { Void, Irrelevant, Proper };

class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(int ground);
  static SimplicialComplex irrelevant_complex(int ground);
  // From any list of faces closed downward or not; the maximal nonempty ones
  // become the facets. An empty list gives the void complex, a list whose
  // faces are all empty gives the irrelevant complex.
  static SimplicialComplex from_faces(int ground, const std::vector<Subset>& faces);
  static SimplicialComplex from_facets(int ground, const std::vector<Subset>& facets);

  ComplexKind kind() const { return kind_; }
  int ground() const { return ground_; }
  const std::vector<Subset>& facets() const { return facets_; }

  bool has_face(Subset f) const;
  std::vector<Subset> all_faces() const;  // includes the empty face unless void
  // Dimension: -2 for void (sentinel), -1 for irrelevant.
  int dim() const;
  Subset vertex_set() const;

  SimplicialComplex link(Subset f) const;
  SimplicialComplex pure_skeleton(int i) const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.ground_ == b.ground_ && a.kind_ == b.kind_ && a.facets_ == b.facets_;
  }
  friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
    return !(a == b);
  }

  std::string str() const;

 private:
  SimplicialComplex(int ground, ComplexKind kind, std::vector<Subset> facets);

  int ground_;
  ComplexKind kind_;
  std::vector<Subset> facets_;  // nonempty antichain, lex sorted; empty unless Proper
};

}  // namespace regpow
