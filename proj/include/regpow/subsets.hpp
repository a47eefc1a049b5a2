#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace regpow {

// Subsets of {1,...,r} as bitmasks, bit k <-> element k+1. Everything here
// assumes r <= 31.
using Subset = std::uint32_t;

inline int subset_size(Subset s) { return std::popcount(s); }
inline Subset singleton(int element) { return Subset{1} << (element - 1); }
inline bool subset_contains(Subset s, int element) { return (s >> (element - 1)) & 1u; }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
inline Subset full_set(int r) { return (Subset{1} << r) - 1; }

inline Subset subset_of(std::initializer_list<int> elements) {
  Subset s = 0;
  for (int e : elements) s |= singleton(e);
  return s;
}

std::vector<int> subset_elements(Subset s);  // ascending, 1-indexed
std::string subset_str(Subset s);            // "{1,2}" / "{}"

// Lexicographic order on the ascending element lists.
bool subset_lex_less(Subset a, Subset b);

}  // namespace regpow
