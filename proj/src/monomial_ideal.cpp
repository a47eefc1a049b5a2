#include "regpow/monomial_ideal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace regpow {

long long total_degree(const Exponents& e) {
  long long d = 0;
  for (int x : e) d += x;
  return d;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

namespace {

bool canonical_less(const Exponents& a, const Exponents& b) {
  long long da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Exponents> generators) : nvars_(nvars) {
  if (nvars < 1) throw std::invalid_argument("monomial ideal: need at least one variable");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != nvars)
      throw std::invalid_argument("monomial ideal: exponent vector length mismatch");
    for (int e : g)
      if (e < 0) throw std::invalid_argument("monomial ideal: negative exponent");
  }
  std::sort(generators.begin(), generators.end(), canonical_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Divisors come earlier in the order, so one forward pass minimalizes.
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& kept : gens_) {
      if (divides(kept, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) gens_.push_back(g);
  }
}

MonomialIdeal MonomialIdeal::zero(int nvars) { return MonomialIdeal(nvars, {}); }

MonomialIdeal MonomialIdeal::unit(int nvars) {
  return MonomialIdeal(nvars, {Exponents(nvars, 0)});
}

MonomialIdeal MonomialIdeal::variable_prime(Subset vars, int nvars) {
  std::vector<Exponents> gens;
  for (int v : subset_elements(vars)) {
    Exponents e(nvars, 0);
    e[v - 1] = 1;
    gens.push_back(e);
  }
  return MonomialIdeal(nvars, std::move(gens));
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && total_degree(gens_[0]) == 0;
}

bool MonomialIdeal::contains(const Exponents& monomial) const {
  if (static_cast<int>(monomial.size()) != nvars_)
    throw std::invalid_argument("contains: length mismatch");
  for (int e : monomial)
    if (e < 0) throw std::invalid_argument("contains: negative exponent");
  for (const auto& g : gens_)
    if (divides(g, monomial)) return true;
  return false;
}

MonomialIdeal MonomialIdeal::multiply(const MonomialIdeal& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("multiply: nvars mismatch");
  std::vector<Exponents> prods;
  prods.reserve(gens_.size() * other.gens_.size());
  for (const auto& g : gens_) {
    for (const auto& h : other.gens_) {
      Exponents p(nvars_);
      for (int i = 0; i < nvars_; ++i) p[i] = g[i] + h[i];
      prods.push_back(std::move(p));
    }
  }
  return MonomialIdeal(nvars_, std::move(prods));
}

MonomialIdeal MonomialIdeal::power(int n) const {
  if (n < 0) throw std::invalid_argument("power: negative exponent");
  if (n == 0) return unit(nvars_);
  MonomialIdeal acc = *this;
  for (int k = 1; k < n; ++k) acc = acc.multiply(*this);
  return acc;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& other) const {
  if (nvars_ != other.nvars_) throw std::invalid_argument("intersect: nvars mismatch");
  std::vector<Exponents> lcms;
  lcms.reserve(gens_.size() * other.gens_.size());
  for (const auto& g : gens_) {
    for (const auto& h : other.gens_) {
      Exponents m(nvars_);
      for (int i = 0; i < nvars_; ++i) m[i] = std::max(g[i], h[i]);
      lcms.push_back(std::move(m));
    }
  }
  return MonomialIdeal(nvars_, std::move(lcms));
}

MonomialIdeal MonomialIdeal::colon(const Exponents& monomial) const {
  if (static_cast<int>(monomial.size()) != nvars_)
    throw std::invalid_argument("colon: length mismatch");
  std::vector<Exponents> quots;
  quots.reserve(gens_.size());
  for (const auto& g : gens_) {
    Exponents q(nvars_);
    for (int i = 0; i < nvars_; ++i) q[i] = std::max(g[i] - monomial[i], 0);
    quots.push_back(std::move(q));
  }
  return MonomialIdeal(nvars_, std::move(quots));
}

MonomialIdeal MonomialIdeal::saturate() const {
  // I : m^inf equals the intersection over i of I : x_i^inf, and each colon
  // stabilizes once the exponent reaches the cap of x_i over the generators.
  MonomialIdeal cur = *this;
  for (;;) {
    auto caps = cur.exponent_caps();
    MonomialIdeal acc = unit(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      Exponents u(nvars_, 0);
      u[i] = caps[i];
      acc = acc.intersect(cur.colon(u));
    }
    if (acc == cur) return cur;
    cur = acc;
  }
}

MonomialIdeal MonomialIdeal::localize(Subset vars_to_one) const {
  std::vector<Exponents> gens = gens_;
  for (auto& g : gens)
    for (int v : subset_elements(vars_to_one)) g[v - 1] = 0;
  return MonomialIdeal(nvars_, std::move(gens));
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Exponents> gens = gens_;
  for (auto& g : gens)
    for (int& e : g) e = std::min(e, 1);
  return MonomialIdeal(nvars_, std::move(gens));
}

std::vector<int> MonomialIdeal::exponent_caps() const {
  std::vector<int> caps(nvars_, 0);
  for (const auto& g : gens_)
    for (int i = 0; i < nvars_; ++i) caps[i] = std::max(caps[i], g[i]);
  return caps;
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "(0)";
  std::ostringstream os;
  os << "(";
  bool first_gen = true;
  for (const auto& g : gens_) {
    if (!first_gen) os << ", ";
    first_gen = false;
    if (total_degree(g) == 0) {
      os << "1";
      continue;
    }
    bool first_var = true;
    for (int i = 0; i < nvars_; ++i) {
      if (g[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << "x" << (i + 1);
      if (g[i] > 1) os << "^" << g[i];
    }
  }
  os << ")";
  return os.str();
}

}  // namespace regpow
