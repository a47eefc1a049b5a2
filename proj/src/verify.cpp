#include "regpow/verify.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "regpow/closed_forms.hpp"
#include "regpow/degree_complex.hpp"
#include "regpow/graph_enum.hpp"

namespace regpow {

namespace {

struct Snapshot {
  DegreeVector a;
  SimplicialComplex delta;
};

struct StructureOutcome {
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> violations;  // first few, for diagnostics

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (violations.size() < 8) violations.push_back(what);
    }
  }
};

bool is_isolated_in(const SimplicialComplex& delta, int p) {
  if (delta.kind() != ComplexKind::Proper) return false;
  for (Subset f : delta.facets())
    if (f == singleton(p)) return true;
  return false;
}

// Re-derives every degree complex of I_G^n from the combinatorial
// characterizations: which edges survive, which vertices become isolated,
// how negative multidegrees reduce to links, how the two membership routes
// compare, and how the pure 1-skeleton matches the symbolic-power complex.
StructureOutcome structure_checks(const Graph& g, int n, const MonomialIdeal& ideal_power,
                                  const MonomialIdeal& ideal_symbolic,
                                  const std::vector<Snapshot>& snaps) {
  StructureOutcome out;
  const int r = g.r();
  const bool isolate_free = g.isolated_mask() == 0;

  std::map<std::vector<int>, const SimplicialComplex*> by_entries;
  for (const auto& s : snaps) by_entries[s.a.entries] = &s.delta;

  // Full dual-route checking is affordable on small ideals; sample otherwise.
  const bool small = r <= 4 && static_cast<int>(ideal_power.generators().size()) <= 60;
  const std::size_t dual_stride = small ? 1 : 13;
  const bool dual_enabled = static_cast<int>(ideal_power.generators().size()) <= 90;

  for (std::size_t idx = 0; idx < snaps.size(); ++idx) {
    const DegreeVector& a = snaps[idx].a;
    const SimplicialComplex& delta = snaps[idx].delta;
    const Subset ga = a.neg_support();

    if (dual_enabled && idx % dual_stride == 0)
      out.expect(delta == degree_complex_localized(ideal_power, a),
                 "degree-complex routes disagree at " + a.str());

    if (ga == 0) {
      // the 1-skeleton carries exactly the symbolic-power complex
      if (isolate_free)
        out.expect(delta.pure_skeleton(1) == degree_complex(ideal_symbolic, a),
                   "skeleton differs from the symbolic complex at " + a.str());
      // edges of the degree complex
      for (int p = 1; p <= r; ++p) {
        for (int q = p + 1; q <= r; ++q) {
          long long outside = a.total() - a.entries[p - 1] - a.entries[q - 1];
          bool expected = g.has_edge(p, q) && outside <= n - 1;
          out.expect(delta.has_face(singleton(p) | singleton(q)) == expected,
                     "edge rule fails at " + a.str() + " pair {" + std::to_string(p) + "," +
                         std::to_string(q) + "}");
        }
      }
      // isolated vertices of the degree complex
      for (int p = 1; p <= r; ++p) {
        int deg = g.degree(p);
        if (deg == 0) continue;
        bool iso = is_isolated_in(delta, p);
        if (deg <= 2) {
          out.expect(!iso, "degree<=2 vertex isolated at " + a.str());
          continue;
        }
        long long t = 0, nsum = 0;
        const Subset np = g.neighbors(p);
        for (int i = 1; i <= r; ++i) {
          if (i == p) continue;
          if (subset_contains(np, i))
            nsum += a.entries[i - 1];
          else
            t += a.entries[i - 1];
        }
        bool cond = t <= n - 1 && nsum <= 2 * (n - t) - 1;
        if (cond) {
          for (int j : subset_elements(np)) {
            if (nsum - a.entries[j - 1] < n - t) {
              cond = false;
              break;
            }
          }
        }
        out.expect(iso == cond, "vertex rule fails at " + a.str() + " p=" + std::to_string(p));
        if (n == 1 && isolate_free) out.expect(!iso, "isolated vertex at n=1, " + a.str());
      }
    } else {
      auto it = by_entries.find(a.pos_part());
      out.expect(it != by_entries.end(), "missing nonnegative part of " + a.str());
      if (it != by_entries.end())
        out.expect(delta == it->second->link(ga), "link transfer fails at " + a.str());
    }
  }
  return out;
}

CaseRecord make_row(const std::string& key, int n, const std::string& check,
                    const std::string& lhs, const std::string& branch, const std::string& rhs,
                    bool match, bool applicable = true) {
  CaseRecord rec;
  rec.graph = key;
  rec.n = n;
  rec.check = check;
  rec.lhs = lhs;
  rec.branch = branch;
  rec.rhs = rhs;
  rec.applicable = applicable;
  rec.match = applicable ? match : true;
  return rec;
}

}  // namespace

std::vector<CaseRecord> evaluate_case(const Graph& g, int n) {
  std::vector<CaseRecord> rows;
  const std::string key = g.str();

  MonomialIdeal ideal = stanley_reisner(g);
  MonomialIdeal ideal_power = ideal.power(n);
  MonomialIdeal ideal_symbolic = symbolic_power(g, n);

  std::vector<Snapshot> snaps;
  AiTable tab_pow = ai_table(ideal_power, [&](const DegreeVector& a,
                                              const SimplicialComplex& delta,
                                              const HomologyDims&) {
    snaps.push_back({a, delta});
  });
  AiTable tab_sym = ai_table(ideal_symbolic);

  FormulaResult f1 = a1_formula(g, n);
  rows.push_back(make_row(key, n, "a1", f1.value.str(), f1.branch, tab_pow.ai(1).str(),
                          f1.value == tab_pow.ai(1)));
  FormulaResult f2 = a2_formula(g, n);
  rows.push_back(make_row(key, n, "a2", f2.value.str(), f2.branch, tab_pow.ai(2).str(),
                          f2.value == tab_pow.ai(2)));
  FormulaResult fg = greg_formula(g, n);
  rows.push_back(make_row(key, n, "greg", fg.value.str(), fg.branch, tab_pow.greg().str(),
                          fg.value == tab_pow.greg()));
  rows.push_back(make_row(key, n, "greg=reg(symbolic)", tab_pow.greg().str(), "",
                          tab_sym.reg().str(), tab_pow.greg() == tab_sym.reg()));
  for (int j = 0; j <= 2; ++j) {
    rows.push_back(make_row(key, n, "a2^" + std::to_string(j), tab_pow.ai_j(2, j).str(), "",
                            tab_sym.ai_j(2, j).str(), tab_pow.ai_j(2, j) == tab_sym.ai_j(2, j)));
  }

  if (g.isolated_mask() == 0) {
    bool closed = is_cm(g, n);
    bool oracle = tab_pow.ai(0).is_neg_inf() && tab_pow.ai(1).is_neg_inf();
    rows.push_back(make_row(key, n, "cm", closed ? "CM" : "not-CM", "",
                            oracle ? "CM" : "not-CM", closed == oracle));
  } else {
    rows.push_back(make_row(key, n, "cm", "n/a", "", "n/a", true, false));
  }

  StructureOutcome st = structure_checks(g, n, ideal_power, ideal_symbolic, snaps);

  // containment of the ordinary power in the symbolic power
  bool contained = true;
  for (const auto& gen : ideal_power.generators())
    if (!ideal_symbolic.contains(gen)) contained = false;
  st.expect(contained, "power not inside symbolic power");

  if (n == 1) {
    st.expect(ideal_symbolic == ideal, "first symbolic power differs from the ideal");
    MonomialIdeal meet = MonomialIdeal::unit(g.r());
    for (Subset facet : complex_facets(g))
      meet = meet.intersect(MonomialIdeal::variable_prime(full_set(g.r()) & ~facet, g.r()));
    st.expect(meet == ideal, "facet-prime decomposition differs from the ideal");
  }

  std::string detail = st.failures == 0
                           ? "violations=0"
                           : "violations=" + std::to_string(st.failures) + " [" +
                                 st.violations.front() + "]";
  rows.push_back(make_row(key, n, "degree-complex-structure",
                          "checks=" + std::to_string(st.checks), "", detail, st.failures == 0));
  return rows;
}

VerificationReport run_verify(const VerifyOptions& options) {
  if (options.max_vertices < 3 || options.max_vertices > 6)
    throw std::invalid_argument("verify: max-vertices out of range [3,6]");
  if (options.max_n < 1 || options.max_n > 4)
    throw std::invalid_argument("verify: max-n out of range [1,4]");
  if (options.workers < 1) throw std::invalid_argument("verify: workers must be positive");

  auto start = std::chrono::steady_clock::now();

  std::vector<std::pair<Graph, int>> cases;
  int graphs = 0;
  for (int r = 3; r <= options.max_vertices; ++r) {
    for (const Graph& g : enumerate_graphs(r, options.include_isolated, options.dedupe)) {
      ++graphs;
      for (int n = 1; n <= options.max_n; ++n) cases.push_back({g, n});
    }
  }

  std::vector<std::vector<CaseRecord>> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      try {
        results[i] = evaluate_case(cases[i].first, cases[i].second);
      } catch (const std::exception& e) {
        results[i] = {make_row(cases[i].first.str(), cases[i].second, "exception", e.what(), "",
                               "", false)};
      }
    }
  };
  const int nthreads = std::min<std::size_t>(options.workers, std::max<std::size_t>(cases.size(), 1));
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  VerificationReport report;
  report.options = options;
  report.graphs = graphs;
  report.cases = static_cast<int>(cases.size());
  for (auto& rows : results)
    for (auto& row : rows) {
      if (!row.match) ++report.mismatches;
      report.records.push_back(std::move(row));
    }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

std::string row_status(const CaseRecord& rec) {
  if (!rec.applicable) return "n/a";
  return rec.match ? "ok" : "MISMATCH";
}

}  // namespace

std::string VerificationReport::render_text() const {
  std::ostringstream os;
  os << "verify sweep: max-vertices=" << options.max_vertices << " max-n=" << options.max_n
     << " isolated=" << (options.include_isolated ? "yes" : "no")
     << " dedupe=" << (options.dedupe ? "yes" : "no") << "\n";
  for (const auto& rec : records) {
    os << rec.graph << " n=" << rec.n << " " << rec.check << ": " << rec.lhs;
    if (!rec.branch.empty()) os << " [" << rec.branch << "]";
    if (!rec.rhs.empty()) os << " vs " << rec.rhs;
    os << " " << row_status(rec) << "\n";
  }
  os << "summary: graphs=" << graphs << " cases=" << cases << " rows=" << records.size()
     << " mismatches=" << mismatches << "\n";
  return os.str();
}

std::string VerificationReport::render_csv() const {
  std::ostringstream os;
  os << "graph,n,check,lhs,branch,rhs,status\n";
  for (const auto& rec : records) {
    os << rec.graph << "," << rec.n << "," << rec.check << "," << rec.lhs << "," << rec.branch
       << "," << rec.rhs << "," << row_status(rec) << "\n";
  }
  os << "summary,,,graphs=" << graphs << ",cases=" << cases << ",rows=" << records.size()
     << ",mismatches=" << mismatches << "\n";
  return os.str();
}

}  // namespace regpow
