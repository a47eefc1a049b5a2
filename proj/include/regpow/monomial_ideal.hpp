#pragma once

#include <string>
#include <vector>

#include "regpow/subsets.hpp"

namespace regpow {

// Exponent vector of a monomial x1^e1 ... xr^er. Entries are nonnegative for
// monomials; degree vectors with negative entries live in degree_complex.hpp.
using Exponents = std::vector<int>;

long long total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);  // componentwise <=

// A monomial ideal given by its unique minimal generating set, kept as a
// divisibility antichain in a fixed order. The zero ideal has no generators;
// the unit ideal is generated by the zero vector.
class MonomialIdeal {
 public:
  MonomialIdeal(int nvars, std::vector<Exponents> generators);

  static MonomialIdeal zero(int nvars);
  static MonomialIdeal unit(int nvars);
  // The prime generated by the listed variables (1-indexed bitmask).
  static MonomialIdeal variable_prime(Subset vars, int nvars);

  int nvars() const { return nvars_; }
  const std::vector<Exponents>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool contains(const Exponents& monomial) const;
  MonomialIdeal multiply(const MonomialIdeal& other) const;
  MonomialIdeal power(int n) const;
  MonomialIdeal intersect(const MonomialIdeal& other) const;
  MonomialIdeal colon(const Exponents& monomial) const;  // I : x^u
  MonomialIdeal saturate() const;                        // I : m^infinity
  MonomialIdeal localize(Subset vars_to_one) const;      // x_i -> 1 on the subset, same nvars
  MonomialIdeal radical() const;

  // Largest exponent of each variable over the generators (0 on the zero ideal).
  std::vector<int> exponent_caps() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

  std::string str() const;

 private:
  int nvars_;
  std::vector<Exponents> gens_;
};

}  // namespace regpow
