#include "ahg/bounds.hpp"

#include <algorithm>

#include "ahg/coloring.hpp"
#include "ahg/density.hpp"
#include "ahg/errors.hpp"
#include "ahg/intmath.hpp"

namespace ahg {

namespace {

void require_nonempty(const Graph& g, const char* what) {
  if (g.vertex_count() == 0) fail(errc::empty_graph, what);
}

}  // namespace

int bound_mad(const Graph& g) {
  require_nonempty(g, "bound_mad");
  return static_cast<int>(floor_fraction(mad(g))) + 1;
}

int bound_delta(const Graph& g) {
  require_nonempty(g, "bound_delta");
  return degree_stats(g).max_degree + 1;
}

int bound_brooks(const Graph& g) {
  require_nonempty(g, "bound_brooks");
  int best = 0;
  for (const auto& part : connected_components(g)) {
    int size = static_cast<int>(part.size());
    int max_deg = 0;
    bool complete = true;
    bool two_regular = true;
    for (int v : part) {
      int d = g.degree(v);
      max_deg = std::max(max_deg, d);
      complete = complete && d == size - 1;
      two_regular = two_regular && d == 2;
    }
    int value;
    if (complete)
      value = size;
    else if (two_regular && size % 2 == 1)  // connected 2-regular = cycle
      value = 3;
    else
      value = max_deg;
    best = std::max(best, value);
  }
  return best;
}

std::optional<int> bound_soto(const Graph& g) {
  if (g.vertex_count() == 0 || connected_components(g).size() != 1) return std::nullopt;
  long long radicand =
      9 + 8 * (static_cast<long long>(g.edge_count()) - g.vertex_count());
  return static_cast<int>((3 + integer_sqrt(radicand)) / 2);
}

int lower_clique(const Graph& g) {
  require_nonempty(g, "lower_clique");
  long long n = g.vertex_count();
  return static_cast<int>(ceil_div(n * n, n * n - 2 * g.edge_count()));
}

std::optional<int> exact_case(const Graph& g) {
  require_nonempty(g, "exact_case");
  if (!is_average_hereditary(g).is_ah) return std::nullopt;
  int value = static_cast<int>(floor_fraction(average_degree(g))) + 1;
  if (lower_clique(g) != value) return std::nullopt;
  return value;
}

BoundsReport bounds_report(const Graph& g, bool run_exact, int exact_limit) {
  require_nonempty(g, "bounds_report");
  BoundsReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  r.avg_degree = average_degree(g);
  r.mad_value = densest_subgraph(g).mad;
  r.is_ah = compare_fraction(r.mad_value, r.avg_degree) == std::strong_ordering::equal;
  r.bound_mad = static_cast<int>(floor_fraction(r.mad_value)) + 1;
  r.bound_delta = bound_delta(g);
  r.bound_brooks = bound_brooks(g);
  r.bound_soto = bound_soto(g);
  r.lower_clique = lower_clique(g);
  int floor_d_plus_1 = static_cast<int>(floor_fraction(r.avg_degree)) + 1;
  if (r.is_ah && r.lower_clique == floor_d_plus_1) r.exact_case = floor_d_plus_1;
  DegeneracyOrder order = degeneracy_order(g);
  r.degeneracy = order.degeneracy;
  r.greedy_colors = greedy_color(g, order.order).num_colors;
  if (run_exact && r.n <= exact_limit) r.exact_chromatic = exact_chromatic(g, exact_limit);
  return r;
}

}  // namespace ahg
