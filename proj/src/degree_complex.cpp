#include "regpow/degree_complex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace regpow {

Subset DegreeVector::neg_support() const {
  Subset s = 0;
  for (int i = 0; i < size(); ++i)
    if (entries[i] < 0) s |= singleton(i + 1);
  return s;
}

Exponents DegreeVector::pos_part() const {
  Exponents p(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) p[i] = std::max(entries[i], 0);
  return p;
}

long long DegreeVector::total() const {
  long long t = 0;
  for (int e : entries) t += e;
  return t;
}

std::string DegreeVector::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < size(); ++i) {
    if (i) os << ",";
    os << entries[i];
  }
  os << ")";
  return os.str();
}

namespace {

void require_matching(const MonomialIdeal& I, const DegreeVector& a) {
  if (a.size() != I.nvars())
    throw std::invalid_argument("degree complex: degree vector length mismatch");
}

// For each generator u, the coordinates where a_i < deg_i(u).
std::vector<Subset> low_coordinate_masks(const MonomialIdeal& I, const DegreeVector& a) {
  std::vector<Subset> low;
  low.reserve(I.generators().size());
  for (const auto& g : I.generators()) {
    Subset s = 0;
    for (int i = 0; i < I.nvars(); ++i)
      if (a.entries[i] < g[i]) s |= singleton(i + 1);
    low.push_back(s);
  }
  return low;
}

}  // namespace

SimplicialComplex degree_complex(const MonomialIdeal& I, const DegreeVector& a) {
  require_matching(I, a);
  const int r = I.nvars();
  const Subset full = full_set(r);
  const Subset g = a.neg_support();
  const Subset comp = full & ~g;
  const auto low = low_coordinate_masks(I, a);

  std::vector<Subset> members;
  Subset f = comp;
  for (;;) {
    bool in = true;
    for (Subset s : low) {
      if ((s & comp & ~f) == 0) {
        in = false;
        break;
      }
    }
    if (in) members.push_back(f);
    if (f == 0) break;
    f = (f - 1) & comp;
  }
  return SimplicialComplex::from_faces(r, members);
}

SimplicialComplex degree_complex_localized(const MonomialIdeal& I, const DegreeVector& a) {
  require_matching(I, a);
  const int r = I.nvars();
  const Subset g = a.neg_support();
  const Subset comp = full_set(r) & ~g;
  const Exponents pos = a.pos_part();

  std::vector<Subset> members;
  Subset f = comp;
  for (;;) {
    if (!I.localize(f | g).contains(pos)) members.push_back(f);
    if (f == 0) break;
    f = (f - 1) & comp;
  }
  return SimplicialComplex::from_faces(r, members);
}

bool takayama_gate(const MonomialIdeal& I, const DegreeVector& a) {
  require_matching(I, a);
  Exponents indicator(I.nvars(), 0);
  for (int v : subset_elements(a.neg_support())) indicator[v - 1] = 1;
  return !I.radical().contains(indicator);
}

int lc_piece_dim(const MonomialIdeal& I, int i, const DegreeVector& a) {
  if (i < 0) throw std::invalid_argument("lc_piece_dim: negative cohomological index");
  if (!takayama_gate(I, a)) return 0;
  HomologyDims dims = reduced_homology_dims(degree_complex(I, a));
  return dims.dim(i - subset_size(a.neg_support()) - 1);
}

InvariantValue AiTable::ai(int i) const {
  if (i < 0) throw std::invalid_argument("AiTable: negative index");
  if (i > nvars) return InvariantValue::neg_inf();
  return by_i[i];
}

InvariantValue AiTable::ai_j(int i, int j) const {
  auto it = by_ij.find({i, j});
  return it == by_ij.end() ? InvariantValue::neg_inf() : it->second;
}

InvariantValue AiTable::greg() const {
  InvariantValue best = InvariantValue::neg_inf();
  for (int i = 1; i <= nvars; ++i) best.raise_to(ai(i) + i);
  return best;
}

InvariantValue AiTable::reg() const {
  InvariantValue best = InvariantValue::neg_inf();
  for (int i = 0; i <= nvars; ++i) best.raise_to(ai(i) + i);
  return best;
}

AiTable ai_table(const MonomialIdeal& I, const DomainObserver& observer) {
  const int r = I.nvars();
  AiTable table;
  table.nvars = r;
  table.caps = I.exponent_caps();
  table.by_i.assign(r + 1, InvariantValue::neg_inf());

  const MonomialIdeal rad = I.radical();
  std::map<std::pair<int, std::vector<Subset>>, HomologyDims> homology_cache;

  std::vector<int> a(r, -1);
  for (;;) {
    DegreeVector dv(a);
    SimplicialComplex delta = degree_complex(I, dv);

    auto key = std::make_pair(static_cast<int>(delta.kind()), delta.facets());
    auto it = homology_cache.find(key);
    if (it == homology_cache.end())
      it = homology_cache.emplace(key, reduced_homology_dims(delta)).first;
    const HomologyDims& dims = it->second;

    const Subset g = dv.neg_support();

    // The gate is implied: if x_{G_a} lies in the radical then some
    // generator is supported inside G_a and the localization is the unit
    // ideal, so the complex is void.
    Exponents indicator(r, 0);
    for (int v : subset_elements(g)) indicator[v - 1] = 1;
    if (rad.contains(indicator) && delta.kind() != ComplexKind::Void)
      throw std::logic_error("ai_table: gate violated at " + dv.str());

    bool at_cap = false;
    for (int i = 0; i < r; ++i)
      if (a[i] == table.caps[i]) at_cap = true;
    if (at_cap && !dims.all_zero())
      throw std::logic_error("ai_table: nonvanishing piece at the exponent cap " + dv.str());

    if (observer) observer(dv, delta, dims);

    const int gs = subset_size(g);
    const long long tot = dv.total();
    for (int i = 0; i <= r; ++i) {
      if (dims.dim(i - gs - 1) > 0) {
        table.by_i[i].raise_to(InvariantValue::of(tot));
        auto [slot, inserted] = table.by_ij.try_emplace({i, gs}, InvariantValue::of(tot));
        if (!inserted) slot->second.raise_to(InvariantValue::of(tot));
      }
    }
    ++table.domain_points;

    int k = 0;
    while (k < r && a[k] == table.caps[k]) {
      a[k] = -1;
      ++k;
    }
    if (k == r) break;
    ++a[k];
  }
  return table;
}

InvariantValue ai_oracle(const MonomialIdeal& I, int i) {
  if (i < 0) throw std::invalid_argument("ai_oracle: negative index");
  return ai_table(I).ai(i);
}

InvariantValue ai_j_oracle(const MonomialIdeal& I, int i, int j) {
  return ai_table(I).ai_j(i, j);
}

InvariantValue greg_oracle(const MonomialIdeal& I) { return ai_table(I).greg(); }

InvariantValue reg_oracle(const MonomialIdeal& I) { return ai_table(I).reg(); }

}  // namespace regpow
