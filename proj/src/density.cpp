#include "ahg/density.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

#include "ahg/errors.hpp"
#include "ahg/max_flow.hpp"

namespace ahg {

namespace {

using int128 = __int128;

long long narrow_cap(int128 value) {
  if (value > std::numeric_limits<long long>::max())
    fail(errc::too_large, "flow capacity exceeds the 64-bit range");
  return static_cast<long long>(value);
}

// Goldberg's construction, scaled to integers for the guess a/b: some
// nonempty S has |E(S)|/|S| > a/b iff the min s-t cut is below n*m*b, and
// the source side of such a cut (minus s) is a witness S.
std::pair<bool, std::vector<int>> solve_guess(const Graph& g, long long a, long long b) {
  int n = g.vertex_count();
  int m = g.edge_count();
  int s = n;
  int t = n + 1;

  FlowNetwork net(n + 2);
  long long cap_source = narrow_cap(int128(m) * b);
  for (int v = 0; v < n; ++v) {
    net.add_arc(s, v, cap_source);
    net.add_arc(v, t, narrow_cap(int128(m) * b + 2 * int128(a) - int128(b) * g.degree(v)));
  }
  for (auto [u, v] : g.edges()) {
    net.add_arc(u, v, b);
    net.add_arc(v, u, b);
  }
  long long threshold = narrow_cap(int128(n) * m * b);

  CutResult cut = net.max_flow_min_cut(s, t);
  if (cut.flow_value >= threshold) return {false, {}};

  std::vector<int> witness;
  for (int v : cut.source_side)
    if (v != s) witness.push_back(v);
  return {true, std::move(witness)};
}

DensestResult result_for(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  int e = induced_subgraph(g, vertices).graph.edge_count();
  DensestResult r;
  r.density = Fraction(e, static_cast<long long>(vertices.size()));
  r.mad = r.density * 2;
  r.subgraph_vertices = std::move(vertices);
  return r;
}

std::vector<int> mask_vertices(unsigned mask) {
  std::vector<int> out;
  for (int v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

}  // namespace

std::pair<bool, std::vector<int>> goldberg_feasible(const Graph& g, Fraction guess) {
  if (g.edge_count() == 0) fail(errc::no_edges, "goldberg_feasible");
  if (guess.num < 0) fail(errc::bad_params, "negative guess " + to_string(guess));
  return solve_guess(g, guess.num, guess.den);
}

DensestResult densest_subgraph(const Graph& g) {
  int n = g.vertex_count();
  int m = g.edge_count();
  if (n == 0) fail(errc::empty_graph, "densest_subgraph");
  if (m == 0) return result_for(g, {0});

  // All subgraph densities are fractions e/s with s <= n, so any two distinct
  // values differ by at least 1/(n(n-1)). Binary-search the numerator over
  // the grid with that denominator: lo stays feasible (strictly below some
  // achievable density), hi stays infeasible. The final one-step interval
  // (lo/B, (lo+1)/B] then contains exactly one achievable density — the
  // maximum — and the last feasible witness achieves it.
  long long B = static_cast<long long>(n) * (n - 1);
  long long lo = static_cast<long long>(m) * (n - 1) - 1;       // < m/n = d(V(G))
  long long hi = (static_cast<long long>(n) * (n - 1) / 2) * (n - 1);  // = max possible density
  std::vector<int> witness(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) witness[static_cast<size_t>(v)] = v;

  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    auto [feasible, side] = solve_guess(g, mid, B);
    if (feasible) {
      lo = mid;
      witness = std::move(side);
    } else {
      hi = mid;
    }
  }

  DensestResult r = result_for(g, std::move(witness));
  if (compare_fraction(r.density, Fraction(lo, B)) <= 0)
    throw std::logic_error("densest-subgraph search left a non-improving witness");
  return r;
}

Fraction mad(const Graph& g) { return densest_subgraph(g).mad; }

DensestResult mad_bruteforce(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) fail(errc::empty_graph, "mad_bruteforce");
  if (n > 20) fail(errc::too_large, "vertex count " + std::to_string(n) + " exceeds 20");

  std::vector<unsigned> adj(static_cast<size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<size_t>(u)] |= 1u << v;
    adj[static_cast<size_t>(v)] |= 1u << u;
  }

  // edges[S] via the lowest vertex of S: edges(S) = edges(S\{v}) + |N(v) ∩ S|.
  std::vector<int> edges(size_t{1} << n, 0);
  unsigned full = (1u << n) - 1u;
  long long best_e = 0;
  int best_s = 1;
  unsigned best_mask = 1u;
  for (unsigned mask = 1; mask <= full; ++mask) {
    int v = std::countr_zero(mask);
    unsigned rest = mask & (mask - 1);
    int e = edges[rest] + std::popcount(adj[static_cast<size_t>(v)] & rest);
    edges[mask] = e;
    int s = std::popcount(mask);
    int128 lhs = int128(e) * best_s;
    int128 rhs = int128(best_e) * s;
    if (lhs > rhs || (lhs == rhs && mask != best_mask &&
                      mask_vertices(mask) < mask_vertices(best_mask))) {
      best_e = e;
      best_s = s;
      best_mask = mask;
    }
  }
  return result_for(g, mask_vertices(best_mask));
}

AhVerdict is_average_hereditary(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  DensestResult densest = densest_subgraph(g);
  if (compare_fraction(densest.mad, average_degree(g)) == std::strong_ordering::equal)
    return {};
  AhVerdict verdict;
  verdict.is_ah = false;
  verdict.witness = std::move(densest);
  return verdict;
}

}  // namespace ahg
