#include "ahg/generators.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "ahg/errors.hpp"
#include "ahg/rng.hpp"

namespace ahg {

Graph gen_random_tree(int n, std::uint64_t seed) {
  if (n < 1) fail(errc::bad_params, "tree needs n >= 1, got " + std::to_string(n));
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{0, 1}});

  Rng rng(seed);
  std::vector<int> prufer(static_cast<size_t>(n - 2));
  for (auto& entry : prufer) entry = static_cast<int>(rng.below(n));

  std::vector<int> degree(static_cast<size_t>(n), 1);
  for (int v : prufer) ++degree[static_cast<size_t>(v)];

  // Standard decode, always joining the smallest current leaf.
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[static_cast<size_t>(v)] == 1) leaves.push(v);

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n - 1));
  for (int v : prufer) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[static_cast<size_t>(v)] == 1) leaves.push(v);
  }
  int last1 = leaves.top();
  leaves.pop();
  int last2 = leaves.top();
  edges.emplace_back(last1, last2);
  return Graph(n, std::move(edges));
}

Graph gen_random_regular(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 0) fail(errc::bad_params, "n = " + std::to_string(n) + ", k = " + std::to_string(k));
  if (k >= n)
    fail(errc::infeasible_degree,
         "degree " + std::to_string(k) + " needs more than " + std::to_string(n) + " vertices");
  if ((static_cast<long long>(n) * k) % 2 != 0)
    fail(errc::infeasible_degree, "n*k = " + std::to_string(static_cast<long long>(n) * k) +
                                      " is odd");
  if (k == 0) return Graph(n, {});

  Rng rng(seed);
  std::vector<int> stubs(static_cast<size_t>(n) * static_cast<size_t>(k));
  for (size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<int>(i) / k;

  for (int attempt = 0; attempt < 1000; ++attempt) {
    rng.shuffle(stubs);
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(stubs.size() / 2);
    bool ok = true;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      if (u > v) std::swap(u, v);
      if (!seen.emplace(u, v).second) {
        ok = false;
        break;
      }
      edges.emplace_back(u, v);
    }
    if (ok) return Graph(n, std::move(edges));
  }
  fail(errc::retry_exhausted, "no simple pairing after 1000 attempts");
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) fail(errc::bad_params, "n = " + std::to_string(n));
  if (!(p >= 0.0 && p <= 1.0)) fail(errc::bad_params, "p = " + std::to_string(p));

  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph gen_clique_plus_path(int a, int b) {
  if (a < 3 || b < 1) fail(errc::bad_params, "a = " + std::to_string(a) + ", b = " + std::to_string(b));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < a; ++v) edges.emplace_back(u, v);
  edges.emplace_back(0, a);
  for (int i = 0; i + 1 < b; ++i) edges.emplace_back(a + i, a + i + 1);
  return Graph(a + b, std::move(edges));
}

}  // namespace ahg
