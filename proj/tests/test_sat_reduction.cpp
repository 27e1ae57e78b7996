#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <functional>
#include <vector>

#include "ahg/coloring.hpp"
#include "ahg/density.hpp"
#include "ahg/errors.hpp"
#include "ahg/graph.hpp"
#include "ahg/sat_reduction.hpp"

using ahg::CnfFormula;
using ahg::errc;
using ahg::Error;
using ahg::Fraction;
using ahg::VertexRole;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return errc::bad_params;
}

}  // namespace

TEST_CASE("parse_cnf basics") {
  CnfFormula f = ahg::parse_cnf("p cnf 3 1\n1 2 3 0\n");
  CHECK(f.num_vars == 3);
  REQUIRE(f.clauses.size() == 1);
  CHECK(f.clauses[0] == std::array<int, 3>{1, 2, 3});

  CnfFormula two = ahg::parse_cnf("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
  CHECK(two.num_vars == 1);
  CHECK(two.clauses.size() == 2);
  CHECK(two.clauses[1] == std::array<int, 3>{-1, -1, -1});
}

TEST_CASE("parse_cnf tolerates comments, blank lines, and split clauses") {
  CnfFormula f = ahg::parse_cnf(
      "c a comment\n"
      "\n"
      "p cnf 2 2\n"
      "1 -2\n"
      "1 0\n"
      "c mid comment\n"
      "-1 2 2 0\n");
  CHECK(f.num_vars == 2);
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[0] == std::array<int, 3>{1, -2, 1});
  CHECK(f.clauses[1] == std::array<int, 3>{-1, 2, 2});
}

TEST_CASE("parse_cnf failure modes") {
  CHECK(code_of([] { ahg::parse_cnf("p cnf 2 1\n1 2 0\n"); }) == errc::not_three_cnf);
  CHECK(code_of([] { ahg::parse_cnf("p cnf 2 1\n1 2 1 2 0\n"); }) == errc::not_three_cnf);
  CHECK(code_of([] { ahg::parse_cnf("1 2 3 0\n"); }) == errc::parse_error);
  CHECK(code_of([] { ahg::parse_cnf("p cnf 2 1\n1 2 x 0\n"); }) == errc::parse_error);
  CHECK(code_of([] { ahg::parse_cnf("p cnf 2 1\n1 2 3 0\n"); }) == errc::parse_error);
  CHECK(code_of([] { ahg::parse_cnf("p cnf 2 2\n1 2 2 0\n"); }) == errc::parse_error);
  CHECK(code_of([] { ahg::parse_cnf("p cnf 2 1\n1 2 2\n"); }) == errc::parse_error);
  CHECK(code_of([] { ahg::parse_cnf("p cnf 0 1\n"); }) == errc::parse_error);
  CHECK(code_of([] { ahg::parse_cnf(""); }) == errc::parse_error);
}

TEST_CASE("write_cnf round trips") {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses = {{1, -2, 3}, {-1, -1, 2}};
  std::string text = ahg::write_cnf(f);
  CHECK(text == "p cnf 3 2\n1 -2 3 0\n-1 -1 2 0\n");
  CnfFormula back = ahg::parse_cnf(text);
  CHECK(back.num_vars == f.num_vars);
  CHECK(back.clauses == f.clauses);
}

TEST_CASE("karp graph of a single clause") {
  CnfFormula f = ahg::parse_cnf("p cnf 3 1\n1 2 3 0\n");
  ahg::KarpGraph kg = ahg::karp_graph(f);
  CHECK(kg.graph.vertex_count() == 15);
  CHECK(kg.graph.edge_count() == 24);
  CHECK(ahg::exact_chromatic(kg.graph) == 3);

  REQUIRE(kg.labels.size() == 15);
  CHECK(kg.labels[0].kind == VertexRole::BaseT);
  CHECK(kg.labels[1].kind == VertexRole::BaseF);
  CHECK(kg.labels[2].kind == VertexRole::BaseB);
  CHECK(kg.labels[3].kind == VertexRole::PosLit);
  CHECK(kg.labels[3].index == 1);
  CHECK(kg.labels[4].kind == VertexRole::NegLit);
  CHECK(kg.labels[4].index == 1);
  CHECK(kg.labels[9].kind == VertexRole::OrNode);
  CHECK(kg.labels[9].index == 0);
  CHECK(kg.labels[9].position == 0);
  CHECK(kg.labels[14].position == 5);
}

TEST_CASE("unsatisfiable two-clause formula forces a fourth color") {
  CnfFormula f = ahg::parse_cnf("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n");
  ahg::KarpGraph kg = ahg::karp_graph(f);
  CHECK(kg.graph.vertex_count() == 17);
  CHECK(kg.graph.edge_count() == 30);
  CHECK_FALSE(ahg::sat_bruteforce(f));
  CHECK(ahg::exact_chromatic(kg.graph) == 4);
}

TEST_CASE("karp structural guarantees") {
  CnfFormula f = ahg::parse_cnf("p cnf 4 3\n1 -2 3 0\n-1 2 -4 0\n2 3 4 0\n");
  ahg::KarpGraph kg = ahg::karp_graph(f);
  const ahg::Graph& g = kg.graph;

  auto pred = ahg::predicted_stats(3, 8);
  CHECK(g.vertex_count() == pred.vertices);
  CHECK(2LL * g.edge_count() == pred.edges_times_2);
  CHECK(ahg::average_degree(g) == pred.density);

  CHECK(ahg::connected_components(g).size() == 1);
  for (int v = 0; v < g.vertex_count(); ++v) REQUIRE(g.degree(v) >= 2);
  for (auto [u, v] : g.edges())
    CHECK((g.degree(u) > 2 || g.degree(v) > 2));

  CHECK(ahg::is_average_hereditary(g).is_ah);
}

TEST_CASE("a rarely used variable can break the hereditary property") {
  // Variable 1 appears in a single clause, so its gadget plus that clause's
  // first OR stage form a 5-vertex cluster tied to the rest by only 4 edges.
  // With enough clauses the remainder is denser than the whole graph:
  // removing the cluster from n=31, m=57 leaves 26 vertices and 48 edges,
  // and 48/26 > 57/31.
  CnfFormula f = ahg::parse_cnf("p cnf 2 4\n1 2 2 0\n2 2 2 0\n2 2 2 0\n2 2 2 0\n");
  ahg::KarpGraph kg = ahg::karp_graph(f);
  CHECK(kg.graph.vertex_count() == 31);
  CHECK(kg.graph.edge_count() == 57);
  ahg::AhVerdict verdict = ahg::is_average_hereditary(kg.graph);
  REQUIRE_FALSE(verdict.is_ah);
  CHECK(verdict.witness->density == Fraction(24, 13));
  CHECK(verdict.witness->subgraph_vertices.size() == 26);

  // Three clauses keep the same lone occurrence below the breaking point.
  CnfFormula g3 = ahg::parse_cnf("p cnf 2 3\n1 2 2 0\n2 2 2 0\n2 2 2 0\n");
  CHECK(ahg::is_average_hereditary(ahg::karp_graph(g3).graph).is_ah);
}

TEST_CASE("karp rejects unused variables and malformed formulas") {
  CHECK(code_of([] { ahg::karp_graph(ahg::parse_cnf("p cnf 2 1\n1 1 1 0\n")); }) ==
        errc::unused_variable);
  CnfFormula empty;
  CHECK(code_of([&] { ahg::karp_graph(empty); }) == errc::bad_params);
  CnfFormula bad;
  bad.num_vars = 1;
  bad.clauses = {{1, 2, 1}};
  CHECK(code_of([&] { ahg::karp_graph(bad); }) == errc::bad_params);
}

TEST_CASE("predicted_stats formulas") {
  auto a = ahg::predicted_stats(1, 6);
  CHECK(a.vertices == 15);
  CHECK(a.edges_times_2 == 48);
  CHECK(a.density == Fraction(48, 15));

  auto b = ahg::predicted_stats(3, 8);
  CHECK(b.vertices == 29);
  CHECK(b.edges_times_2 == 102);
  CHECK(b.density == Fraction(102, 29));

  auto c = ahg::predicted_stats(2, 2);
  CHECK(c.vertices == 17);
  CHECK(c.edges_times_2 == 60);
  CHECK(c.density == Fraction(60, 17));

  CHECK(ahg::compare_fraction(a.density, Fraction(4)) < 0);
  CHECK(ahg::compare_fraction(b.density, Fraction(4)) < 0);

  CHECK(code_of([] { ahg::predicted_stats(0, 2); }) == errc::bad_params);
  CHECK(code_of([] { ahg::predicted_stats(1, 0); }) == errc::bad_params);
  CHECK(code_of([] { ahg::predicted_stats(1, 3); }) == errc::bad_params);
}

TEST_CASE("sat_bruteforce") {
  CHECK(ahg::sat_bruteforce(ahg::parse_cnf("p cnf 3 1\n1 2 3 0\n")));
  CHECK_FALSE(ahg::sat_bruteforce(ahg::parse_cnf("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n")));
  CHECK(ahg::sat_bruteforce(ahg::parse_cnf("p cnf 3 2\n1 2 3 0\n-1 -2 -3 0\n")));

  CnfFormula wide;
  wide.num_vars = 21;
  wide.clauses = {{1, 2, 3}};
  CHECK(code_of([&] { ahg::sat_bruteforce(wide); }) == errc::too_large);
}

TEST_CASE("small reduction correctness sweep") {
  // All 8 single-clause formulas over one variable, plus a few mixed ones.
  for (int bits = 0; bits < 8; ++bits) {
    CnfFormula f;
    f.num_vars = 1;
    f.clauses = {{(bits & 1) ? 1 : -1, (bits & 2) ? 1 : -1, (bits & 4) ? 1 : -1}};
    bool sat = ahg::sat_bruteforce(f);
    CHECK(sat == (ahg::exact_chromatic(ahg::karp_graph(f).graph) <= 3));
  }
  CnfFormula mixed = ahg::parse_cnf("p cnf 2 2\n1 2 2 0\n-1 -2 -2 0\n");
  CHECK(ahg::sat_bruteforce(mixed));
  CHECK(ahg::exact_chromatic(ahg::karp_graph(mixed).graph) == 3);
}
