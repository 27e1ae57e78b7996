#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "ahg/density.hpp"
#include "ahg/errors.hpp"
#include "ahg/generators.hpp"
#include "ahg/graph.hpp"
#include "ahg/rng.hpp"
#include "graphs.hpp"
#include "oracles.hpp"

using ahg::compare_fraction;
using ahg::errc;
using ahg::Error;
using ahg::Fraction;
using ahg::Graph;

namespace {

Fraction density_of(const Graph& g, const std::vector<int>& vertices) {
  std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : vertices) in[static_cast<size_t>(v)] = 1;
  int e = 0;
  for (auto [u, v] : g.edges())
    if (in[static_cast<size_t>(u)] && in[static_cast<size_t>(v)]) ++e;
  return Fraction(e, static_cast<long long>(vertices.size()));
}

}  // namespace

TEST_CASE("goldberg feasibility on K2") {
  Graph k2 = testgraphs::complete(2);
  auto [f1, s1] = ahg::goldberg_feasible(k2, Fraction(1, 2));
  CHECK_FALSE(f1);
  CHECK(s1.empty());

  auto [f2, s2] = ahg::goldberg_feasible(k2, Fraction(1, 4));
  CHECK(f2);
  CHECK(s2 == std::vector<int>{0, 1});
}

TEST_CASE("goldberg witness picks out K7") {
  auto [feasible, side] = ahg::goldberg_feasible(testgraphs::k7_union_k3(), Fraction(2));
  CHECK(feasible);
  CHECK(side == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
}

TEST_CASE("goldberg preconditions") {
  try {
    ahg::goldberg_feasible(Graph(3, {}), Fraction(1, 2));
    FAIL("expected NoEdges");
  } catch (const Error& e) {
    CHECK(e.code() == errc::no_edges);
  }
  CHECK_THROWS_AS(ahg::goldberg_feasible(testgraphs::complete(2), Fraction(-1, 2)), Error);
}

TEST_CASE("densest subgraph on named graphs") {
  auto k7 = ahg::densest_subgraph(testgraphs::k7_union_k3());
  CHECK(k7.subgraph_vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(k7.density == Fraction(3));
  CHECK(k7.mad == Fraction(6));

  auto p3 = ahg::densest_subgraph(testgraphs::path(3));
  CHECK(p3.subgraph_vertices == std::vector<int>{0, 1, 2});
  CHECK(p3.density == Fraction(2, 3));
  CHECK(p3.mad == Fraction(4, 3));

  auto c5 = ahg::densest_subgraph(testgraphs::cycle(5));
  CHECK(c5.subgraph_vertices == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(c5.density == Fraction(1));
  CHECK(c5.mad == Fraction(2));

  auto lone = ahg::densest_subgraph(Graph(4, {}));
  CHECK(lone.subgraph_vertices == std::vector<int>{0});
  CHECK(lone.density == Fraction(0));

  CHECK_THROWS_AS(ahg::densest_subgraph(Graph()), Error);
}

TEST_CASE("mad on named graphs") {
  CHECK(ahg::mad(testgraphs::petersen()) == Fraction(3));
  CHECK(ahg::mad(testgraphs::k7_union_k3()) == Fraction(6));
  CHECK(ahg::mad(testgraphs::complete(2)) == Fraction(1));
  CHECK(ahg::mad(ahg::gen_random_tree(50, 7)) == Fraction(49, 25));
  CHECK(ahg::mad(testgraphs::path(50)) == Fraction(49, 25));
}

TEST_CASE("mad_bruteforce on named graphs") {
  CHECK(ahg::mad_bruteforce(testgraphs::complete(4)).mad == Fraction(3));

  auto star = ahg::mad_bruteforce(testgraphs::star(4));
  CHECK(star.mad == Fraction(8, 5));
  CHECK(star.subgraph_vertices == std::vector<int>{0, 1, 2, 3, 4});

  CHECK(ahg::mad_bruteforce(testgraphs::path(3)).mad == Fraction(4, 3));

  try {
    ahg::mad_bruteforce(Graph(21, {}));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_large);
  }
}

TEST_CASE("mad_bruteforce breaks density ties lexicographically") {
  // Two disjoint triangles: {0,1,2}, {3,4,5}, and their union all have
  // density 1; the lexicographically least achiever is the first triangle.
  Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto best = ahg::mad_bruteforce(g);
  CHECK(best.density == Fraction(1));
  CHECK(best.subgraph_vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("average-hereditary verdicts") {
  CHECK(ahg::is_average_hereditary(ahg::gen_random_tree(30, 3)).is_ah);
  CHECK(ahg::is_average_hereditary(testgraphs::petersen()).is_ah);
  CHECK(ahg::is_average_hereditary(Graph()).is_ah);
  CHECK(ahg::is_average_hereditary(Graph(1, {})).is_ah);

  auto verdict = ahg::is_average_hereditary(testgraphs::k7_union_k3());
  REQUIRE_FALSE(verdict.is_ah);
  REQUIRE(verdict.witness.has_value());
  CHECK(verdict.witness->subgraph_vertices == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK(compare_fraction(verdict.witness->density,
                         ahg::average_degree(testgraphs::k7_union_k3()) / 2) > 0);
}

TEST_CASE("flow result matches enumeration on random graphs") {
  for (int round = 0; round < 120; ++round) {
    int n = 2 + round % 9;  // 2..10
    double p = (round % 3 == 0) ? 0.2 : (round % 3 == 1 ? 0.5 : 0.8);
    Graph g = ahg::gen_gnp(n, p, 4242 + static_cast<unsigned>(round));

    auto flow = ahg::densest_subgraph(g);
    Fraction oracle = oracles::densest_enumerate(g);
    REQUIRE(flow.density == oracle);
    REQUIRE(density_of(g, flow.subgraph_vertices) == flow.density);

    auto brute = ahg::mad_bruteforce(g);
    REQUIRE(brute.mad == flow.mad);
    REQUIRE(density_of(g, brute.subgraph_vertices) == brute.density);
  }
}

TEST_CASE("induced maximization equals arbitrary-subgraph maximization") {
  ahg::Rng rng(99);
  int rounds = 0;
  while (rounds < 40) {
    int n = 3 + static_cast<int>(rng.below(6));  // 3..8
    Graph g = ahg::gen_gnp(n, 0.45, rng.raw());
    if (g.edge_count() == 0 || g.edge_count() > 14) continue;
    ++rounds;
    CHECK(oracles::densest_edge_subsets(g) == ahg::densest_subgraph(g).density);
  }
}

TEST_CASE("verdict is invariant under relabeling") {
  ahg::Rng rng(555);
  for (int round = 0; round < 30; ++round) {
    int n = 4 + static_cast<int>(rng.below(8));
    Graph g = ahg::gen_gnp(n, 0.4, rng.raw());
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    Graph h = oracles::relabel(g, perm);
    CHECK(ahg::mad(g) == ahg::mad(h));
    CHECK(ahg::is_average_hereditary(g).is_ah == ahg::is_average_hereditary(h).is_ah);
  }
}

TEST_CASE("mad bounds sandwich") {
  ahg::Rng rng(321);
  for (int round = 0; round < 40; ++round) {
    int n = 2 + static_cast<int>(rng.below(10));
    Graph g = ahg::gen_gnp(n, 0.5, rng.raw());
    if (g.edge_count() == 0) continue;
    Fraction m = ahg::mad(g);
    CHECK(compare_fraction(m, ahg::average_degree(g)) >= 0);
    CHECK(compare_fraction(m, Fraction(ahg::degree_stats(g).max_degree)) <= 0);
  }
}
