#include "regpow/reports.hpp"

#include <sstream>

#include "regpow/closed_forms.hpp"
#include "regpow/degree_complex.hpp"

namespace regpow {

namespace {

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "inf"; }

void finish(InvariantCell& cell) {
  cell.match = !(cell.formula_ok && cell.oracle_ok) || cell.formula == cell.oracle;
}

std::string cell_str(const InvariantCell& c, Method m) {
  std::ostringstream os;
  if (m != Method::Oracle) {
    os << c.formula;
    if (!c.branch.empty()) os << " [" << c.branch << "]";
  }
  if (m == Method::Both) os << " / ";
  if (m != Method::Formula) os << c.oracle;
  if (m == Method::Both && c.formula_ok && c.oracle_ok) os << (c.match ? " ok" : " MISMATCH");
  return os.str();
}

}  // namespace

InvariantsTable run_invariants(const Graph& g, int n_max, Method method) {
  if (n_max < 1) throw std::invalid_argument("invariants: n-max must be positive");
  InvariantsTable table;
  table.method = method;
  table.graph_key = g.str();

  for (int n = 1; n <= n_max; ++n) {
    InvariantsRow row;
    row.n = n;

    if (method != Method::Oracle) {
      auto closed = [&](InvariantCell& cell, auto&& fn) {
        try {
          FormulaResult res = fn();
          cell.formula = res.value.str();
          cell.branch = res.branch;
          cell.formula_ok = true;
        } catch (const std::invalid_argument&) {
        } catch (const FormulaInapplicable&) {
        }
      };
      closed(row.a1, [&] { return a1_formula(g, n); });
      closed(row.a2, [&] { return a2_formula(g, n); });
      closed(row.greg, [&] { return greg_formula(g, n); });
      // reg of the symbolic power agrees with the geometric regularity of the
      // ordinary power, so the same table answers both.
      closed(row.reg_symbolic, [&] {
        FormulaResult res = greg_formula(g, n);
        res.branch = "= g-reg";
        return res;
      });
      try {
        row.cm.formula = is_cm(g, n) ? "CM" : "not-CM";
        row.cm.formula_ok = true;
      } catch (const std::invalid_argument&) {
      }
    }

    if (method != Method::Formula) {
      MonomialIdeal ideal_power = stanley_reisner(g).power(n);
      AiTable tab = ai_table(ideal_power);
      AiTable tab_sym = ai_table(symbolic_power(g, n));
      row.a1.oracle = tab.ai(1).str();
      row.a2.oracle = tab.ai(2).str();
      row.greg.oracle = tab.greg().str();
      row.reg_symbolic.oracle = tab_sym.reg().str();
      row.cm.oracle = (tab.ai(0).is_neg_inf() && tab.ai(1).is_neg_inf()) ? "CM" : "not-CM";
      row.a1.oracle_ok = row.a2.oracle_ok = row.greg.oracle_ok = row.reg_symbolic.oracle_ok =
          row.cm.oracle_ok = true;
    }

    finish(row.a1);
    finish(row.a2);
    finish(row.greg);
    finish(row.reg_symbolic);
    finish(row.cm);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string InvariantsTable::render_text() const {
  std::ostringstream os;
  os << "graph " << graph_key << "\n";
  for (const auto& row : rows) {
    os << "n=" << row.n << "\n";
    os << "  a1:            " << cell_str(row.a1, method) << "\n";
    os << "  a2:            " << cell_str(row.a2, method) << "\n";
    os << "  g-reg:         " << cell_str(row.greg, method) << "\n";
    os << "  reg(symbolic): " << cell_str(row.reg_symbolic, method) << "\n";
    os << "  cohen-macaulay:" << cell_str(row.cm, method) << "\n";
  }
  return os.str();
}

std::string InvariantsTable::render_csv() const {
  std::ostringstream os;
  os << "graph,n,invariant,formula,branch,oracle,match\n";
  for (const auto& row : rows) {
    auto emit = [&](const char* name, const InvariantCell& c) {
      os << graph_key << "," << row.n << "," << name << "," << c.formula << "," << c.branch << ","
         << c.oracle << ",";
      if (c.formula_ok && c.oracle_ok)
        os << (c.match ? "ok" : "MISMATCH");
      else
        os << "n/a";
      os << "\n";
    };
    emit("a1", row.a1);
    emit("a2", row.a2);
    emit("greg", row.greg);
    emit("reg_symbolic", row.reg_symbolic);
    emit("cm", row.cm);
  }
  return os.str();
}

ClassifyReport run_classify(const Graph& g) {
  ClassifyReport rep;
  rep.graph_key = g.str();
  rep.profile = graph_profile(g);
  try {
    rep.condition = condition_class(g).str();
  } catch (const std::invalid_argument& e) {
    rep.condition_note = e.what();
  }

  auto verdict = [&](MatroidMethod m) -> std::string {
    try {
      return is_matroid(g, m) ? "yes" : "no";
    } catch (const std::invalid_argument& e) {
      return std::string("n/a (") + e.what() + ")";
    }
  };
  rep.matroid_exchange = verdict(MatroidMethod::Exchange);
  rep.matroid_fourcycle = verdict(MatroidMethod::FourCycle);
  rep.matroid_obstruction = verdict(MatroidMethod::Obstruction);
  for (const std::string* v : {&rep.matroid_fourcycle, &rep.matroid_obstruction})
    if (v->size() <= 3 && *v != rep.matroid_exchange) rep.methods_agree = false;
  return rep;
}

std::string ClassifyReport::render_text() const {
  std::ostringstream os;
  os << "graph " << graph_key << "\n";
  os << "girth: " << opt_str(profile.girth) << "  diameter: " << opt_str(profile.diameter)
     << "  max-degree: " << profile.max_degree
     << "  connected: " << (profile.connected ? "yes" : "no") << "\n";
  os << "isolated: " << subset_str(profile.isolated_vertices)
     << "  compact: " << subset_str(profile.compact_vertices) << "\n";
  os << "condition class: " << condition;
  if (!condition_note.empty()) os << " (" << condition_note << ")";
  os << "\n";
  os << "matroid[exchange]: " << matroid_exchange << "\n";
  os << "matroid[4-cycle]: " << matroid_fourcycle << "\n";
  os << "matroid[obstruction]: " << matroid_obstruction << "\n";
  os << "methods agree where defined: " << (methods_agree ? "yes" : "NO") << "\n";
  return os.str();
}

}  // namespace regpow
