#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "regpow/graph_enum.hpp"
#include "regpow/graph_io.hpp"
#include "regpow/reports.hpp"
#include "regpow/verify.hpp"

using namespace regpow;

TEST_CASE("parse JSON graph files") {
  Graph broom = parse_graph_text(R"({"vertices":4, "edges":[[1,2],[1,3],[2,3],[3,4]]})");
  CHECK(isomorphic(broom, broom_graph()));

  Graph edge_iso = parse_graph_text(R"({"vertices":3, "edges":[[1,2]]})");
  CHECK(edge_iso.r() == 3);
  CHECK(edge_iso.isolated_mask() == subset_of({3}));

  CHECK_THROWS_AS(parse_graph_text(R"({"vertices":4, "edges":[[1,1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text(R"({"vertices":4, "edges":[[1,2],[2,1]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text(R"({"vertices":4, "edges":[[1,9]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text(R"({"vertices":"four", "edges":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text(R"({"vertices":4, "edges":[[1]]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text("{not json"), std::invalid_argument);
}

TEST_CASE("parse edge-list graph files") {
  Graph g = parse_graph_text("4\n1 2\n\n3 4\n");
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK_THROWS_AS(parse_graph_text("4\n1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text("4\n1 2 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_text(""), std::invalid_argument);
}

TEST_CASE("serialization round trips") {
  for (const Graph& g : enumerate_graphs(4, true, true)) {
    Graph via_json = parse_graph_text(serialize_graph_json(g));
    CHECK(via_json.r() == g.r());
    CHECK(via_json.edges() == g.edges());
    Graph via_list = parse_graph_text(serialize_graph_edgelist(g));
    CHECK(via_list.edges() == g.edges());
  }
}

TEST_CASE("classification report") {
  ClassifyReport diamond =
      run_classify(Graph(5, {{4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {5, 3}}));
  CHECK(diamond.condition == "C2");
  CHECK(diamond.matroid_exchange == "yes");
  CHECK(diamond.matroid_fourcycle == "yes");
  CHECK(diamond.matroid_obstruction == "yes");
  CHECK(diamond.methods_agree);

  ClassifyReport pentagon = run_classify(cycle_graph(5));
  CHECK(pentagon.condition == "C5[C5]");
  CHECK(pentagon.matroid_exchange == "no");

  ClassifyReport p3 = run_classify(path_graph(4));
  CHECK(p3.condition == "C4");
  CHECK(p3.matroid_obstruction.substr(0, 3) == "n/a");
  CHECK(p3.methods_agree);
}

TEST_CASE("invariant tables") {
  InvariantsTable t = run_invariants(cycle_graph(5), 3, Method::Both);
  REQUIRE(t.rows.size() == 3);
  const InvariantsRow& n2 = t.rows[1];
  CHECK(n2.a1.formula == "-inf");
  CHECK(n2.a1.oracle == "-inf");
  CHECK(n2.a1.match);
  CHECK(n2.greg.formula == "3");
  CHECK(n2.greg.oracle == "3");
  CHECK(n2.greg.match);
  CHECK(n2.reg_symbolic.oracle == "3");
  CHECK(t.render_csv().find("-inf") != std::string::npos);

  // formulas are out of domain on two vertices; the oracle still answers
  InvariantsTable edge = run_invariants(Graph(2, {{1, 2}}), 2, Method::Both);
  CHECK(edge.rows[1].a1.formula == "n/a");
  CHECK(edge.rows[1].a1.oracle == "-inf");
  CHECK(edge.rows[1].a2.oracle == "-2");

  InvariantsTable broom = run_invariants(broom_graph(), 2, Method::Formula);
  CHECK(broom.rows[1].a1.formula == "3");
  CHECK(broom.rows[1].a2.formula == "3");
  CHECK(broom.rows[1].greg.formula == "5");
}

TEST_CASE("verify sweep on three vertices") {
  VerifyOptions opt;
  opt.max_vertices = 3;
  opt.max_n = 1;
  opt.include_isolated = true;
  opt.dedupe = true;
  VerificationReport report = run_verify(opt);
  CHECK(report.mismatches == 0);
  CHECK(report.graphs == 3);
  // the disconnected graph exercises the n = 1 value a_1 = 0
  bool found = false;
  for (const auto& rec : report.records)
    if (rec.check == "a1" && rec.lhs == "0" && rec.rhs == "0") found = true;
  CHECK(found);
}

TEST_CASE("verify reports are deterministic across worker counts") {
  VerifyOptions one;
  one.max_vertices = 4;
  one.max_n = 2;
  one.include_isolated = true;
  one.dedupe = true;
  one.workers = 1;
  VerifyOptions four = one;
  four.workers = 4;
  VerificationReport a = run_verify(one);
  VerificationReport b = run_verify(four);
  CHECK(a.mismatches == 0);
  CHECK(a.render_text() == b.render_text());
  CHECK(a.render_csv() == b.render_csv());
}
