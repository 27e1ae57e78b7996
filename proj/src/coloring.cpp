#include "ahg/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

#include "ahg/bounds.hpp"
#include "ahg/errors.hpp"

namespace ahg {

namespace {

// Backtracking k-colorability with minimum-remaining-values vertex selection
// and canonical color order: a vertex may only take colors 0..(colors already
// in use), so permuting color classes never revisits an equivalent branch.
class KColorSearch {
 public:
  KColorSearch(const Graph& g, int k)
      : g_(g),
        k_(k),
        full_((k >= 64) ? ~0ull : (1ull << k) - 1),
        avail_(static_cast<size_t>(g.vertex_count()), 0),
        colored_(static_cast<size_t>(g.vertex_count()), 0) {
    for (auto& a : avail_) a = full_;
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(int colored_count, int used) {
    int n = g_.vertex_count();
    if (colored_count == n) return true;
    std::uint64_t limit = (used >= k_) ? full_ : ((1ull << (used + 1)) - 1);

    int pick = -1;
    int pick_choices = k_ + 1;
    for (int v = 0; v < n; ++v) {
      if (colored_[static_cast<size_t>(v)]) continue;
      int choices = std::popcount(avail_[static_cast<size_t>(v)] & limit);
      if (choices == 0) return false;
      if (choices < pick_choices) {
        pick = v;
        pick_choices = choices;
      }
    }

    std::uint64_t options = avail_[static_cast<size_t>(pick)] & limit;
    colored_[static_cast<size_t>(pick)] = 1;
    while (options != 0) {
      int c = std::countr_zero(options);
      options &= options - 1;
      std::uint64_t bit = 1ull << c;
      touched_.clear();
      for (int w : g_.neighbors(pick)) {
        if (!colored_[static_cast<size_t>(w)] && (avail_[static_cast<size_t>(w)] & bit)) {
          avail_[static_cast<size_t>(w)] &= ~bit;
          touched_.push_back(w);
        }
      }
      std::vector<int> undo = std::move(touched_);
      if (extend(colored_count + 1, std::max(used, c + 1))) return true;
      for (int w : undo) avail_[static_cast<size_t>(w)] |= bit;
    }
    colored_[static_cast<size_t>(pick)] = 0;
    return false;
  }

  const Graph& g_;
  int k_;
  std::uint64_t full_;
  std::vector<std::uint64_t> avail_;
  std::vector<char> colored_;
  std::vector<int> touched_;
};

int exact_chromatic_connected(const Graph& comp) {
  if (comp.vertex_count() == 1) return 1;
  DegeneracyOrder order = degeneracy_order(comp);
  int upper = greedy_color(comp, order.order).num_colors;
  for (int k = lower_clique(comp); k < upper; ++k)
    if (KColorSearch(comp, k).run()) return k;
  return upper;
}

}  // namespace

DegeneracyOrder degeneracy_order(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) fail(errc::empty_graph, "degeneracy_order");

  std::vector<int> deg(static_cast<size_t>(n));
  std::set<std::pair<int, int>> active;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<size_t>(v)] = g.degree(v);
    active.emplace(deg[static_cast<size_t>(v)], v);
  }

  DegeneracyOrder result;
  std::vector<char> removed(static_cast<size_t>(n), 0);
  std::vector<int> removal;
  removal.reserve(static_cast<size_t>(n));
  while (!active.empty()) {
    auto [d, v] = *active.begin();
    active.erase(active.begin());
    result.degeneracy = std::max(result.degeneracy, d);
    removed[static_cast<size_t>(v)] = 1;
    removal.push_back(v);
    for (int w : g.neighbors(v)) {
      if (removed[static_cast<size_t>(w)]) continue;
      active.erase({deg[static_cast<size_t>(w)], w});
      active.emplace(--deg[static_cast<size_t>(w)], w);
    }
  }
  result.order.assign(removal.rbegin(), removal.rend());
  return result;
}

Coloring greedy_color(const Graph& g, std::span<const int> order) {
  int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n)
    fail(errc::not_a_permutation,
         "order has length " + std::to_string(order.size()) + ", expected " +
             std::to_string(n));
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      fail(errc::not_a_permutation, "vertex " + std::to_string(v));
    seen[static_cast<size_t>(v)] = 1;
  }

  Coloring result;
  result.colors.assign(static_cast<size_t>(n), -1);
  std::vector<int> last_use(static_cast<size_t>(n), -1);  // color -> stamp
  for (int step = 0; step < n; ++step) {
    int v = order[static_cast<size_t>(step)];
    for (int w : g.neighbors(v)) {
      int cw = result.colors[static_cast<size_t>(w)];
      if (cw >= 0) last_use[static_cast<size_t>(cw)] = step;
    }
    int c = 0;
    while (last_use[static_cast<size_t>(c)] == step) ++c;
    result.colors[static_cast<size_t>(v)] = c;
    result.num_colors = std::max(result.num_colors, c + 1);
  }
  return result;
}

int exact_chromatic(const Graph& g, int limit) {
  int n = g.vertex_count();
  if (n == 0) fail(errc::empty_graph, "exact_chromatic");
  if (n > limit)
    fail(errc::too_large,
         "vertex count " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  if (n > 63) fail(errc::too_large, "vertex count " + std::to_string(n) + " exceeds 63");

  int chi = 0;
  for (const auto& part : connected_components(g))
    chi = std::max(chi, exact_chromatic_connected(induced_subgraph(g, part).graph));
  return chi;
}

bool validate_coloring(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count())
    fail(errc::length_mismatch,
         std::to_string(c.colors.size()) + " colors for " +
             std::to_string(g.vertex_count()) + " vertices");
  for (auto [u, v] : g.edges())
    if (c.colors[static_cast<size_t>(u)] == c.colors[static_cast<size_t>(v)]) return false;
  return true;
}

}  // namespace ahg
