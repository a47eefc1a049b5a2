#include "regpow/simplicial_complex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace regpow {

SimplicialComplex::SimplicialComplex(int ground, ComplexKind kind, std::vector<Subset> facets)
    : ground_(ground), kind_(kind), facets_(std::move(facets)) {
  if (ground < 0 || ground > 31) throw std::invalid_argument("complex: bad ground set size");
}

SimplicialComplex SimplicialComplex::void_complex(int ground) {
  return SimplicialComplex(ground, ComplexKind::Void, {});
}

SimplicialComplex SimplicialComplex::irrelevant_complex(int ground) {
  return SimplicialComplex(ground, ComplexKind::Irrelevant, {});
}

SimplicialComplex SimplicialComplex::from_faces(int ground, const std::vector<Subset>& faces) {
  if (faces.empty()) return void_complex(ground);
  std::vector<Subset> nonempty;
  for (Subset f : faces)
    if (f != 0) nonempty.push_back(f);
  if (nonempty.empty()) return irrelevant_complex(ground);

  std::sort(nonempty.begin(), nonempty.end());
  nonempty.erase(std::unique(nonempty.begin(), nonempty.end()), nonempty.end());
  std::vector<Subset> facets;
  for (Subset f : nonempty) {
    bool maximal = true;
    for (Subset g : nonempty) {
      if (g != f && is_subset(f, g)) {
        maximal = false;
        break;
      }
    }
    if (maximal) facets.push_back(f);
  }
  std::sort(facets.begin(), facets.end(), subset_lex_less);
  return SimplicialComplex(ground, ComplexKind::Proper, std::move(facets));
}

SimplicialComplex SimplicialComplex::from_facets(int ground, const std::vector<Subset>& facets) {
  return from_faces(ground, facets);
}

bool SimplicialComplex::has_face(Subset f) const {
  switch (kind_) {
    case ComplexKind::Void:
      return false;
    case ComplexKind::Irrelevant:
      return f == 0;
    case ComplexKind::Proper:
      if (f == 0) return true;
      for (Subset g : facets_)
        if (is_subset(f, g)) return true;
      return false;
  }
  return false;
}

std::vector<Subset> SimplicialComplex::all_faces() const {
  if (kind_ == ComplexKind::Void) return {};
  if (kind_ == ComplexKind::Irrelevant) return {0};
  std::set<Subset> faces;
  for (Subset facet : facets_) {
    Subset f = facet;
    for (;;) {
      faces.insert(f);
      if (f == 0) break;
      f = (f - 1) & facet;
    }
  }
  return std::vector<Subset>(faces.begin(), faces.end());
}

int SimplicialComplex::dim() const {
  if (kind_ == ComplexKind::Void) return -2;
  if (kind_ == ComplexKind::Irrelevant) return -1;
  int d = -1;
  for (Subset f : facets_) d = std::max(d, subset_size(f) - 1);
  return d;
}

Subset SimplicialComplex::vertex_set() const {
  Subset s = 0;
  for (Subset f : facets_) s |= f;
  return s;
}

SimplicialComplex SimplicialComplex::link(Subset f) const {
  if (!has_face(f)) return void_complex(ground_);
  std::vector<Subset> members;
  for (Subset face : all_faces())
    if (is_subset(f, face)) members.push_back(face & ~f);
  return from_faces(ground_, members);
}

SimplicialComplex SimplicialComplex::pure_skeleton(int i) const {
  if (i < 0) throw std::invalid_argument("pure_skeleton: negative dimension");
  std::vector<Subset> members;
  for (Subset face : all_faces())
    if (subset_size(face) == i + 1) members.push_back(face);
  return from_faces(ground_, members);
}

std::string SimplicialComplex::str() const {
  if (kind_ == ComplexKind::Void) return "void";
  if (kind_ == ComplexKind::Irrelevant) return "{empty}";
  std::string out = "<";
  bool first = true;
  for (Subset f : facets_) {
    if (!first) out += ",";
    first = false;
    out += subset_str(f);
  }
  out += ">";
  return out;
}

}  // namespace regpow
