#pragma once

#include <optional>

#include "ahg/fraction.hpp"
#include "ahg/graph.hpp"

namespace ahg {

struct BoundsReport {
  int n = 0;
  int m = 0;
  Fraction avg_degree;
  Fraction mad_value;
  bool is_ah = false;
  int bound_mad = 0;
  int bound_delta = 0;
  std::optional<int> bound_brooks;
  std::optional<int> bound_soto;  // absent for disconnected input
  int lower_clique = 0;
  std::optional<int> exact_case;
  int degeneracy = 0;
  int greedy_colors = 0;
  std::optional<int> exact_chromatic;  // filled only when the exact oracle ran

  friend bool operator==(const BoundsReport&, const BoundsReport&) = default;
};

/// ⌊MAD(G)⌋ + 1: colors always sufficient for G.
int bound_mad(const Graph& g);

/// Δ(G) + 1.
int bound_delta(const Graph& g);

/// Brooks, strengthened per component: k for a complete K_k, 3 for an odd
/// cycle, Δ(component) otherwise; the max over components. Total for n >= 1.
int bound_brooks(const Graph& g);

/// ⌊(3 + √(9 + 8(m−n)))/2⌋ via exact integer square root; requires a
/// connected graph, so absent (not an error) otherwise.
std::optional<int> bound_soto(const Graph& g);

/// Clique lower bound ⌈n²/(n² − 2m)⌉ ≤ ω(G) ≤ χ(G).
int lower_clique(const Graph& g);

/// When G is average hereditary and the clique lower bound meets ⌊d(G)+1⌋,
/// that common value is exactly χ(G) = ω(G); absent otherwise.
std::optional<int> exact_case(const Graph& g);

/// Every bound plus coloring witnesses in one pass. exact_chromatic is
/// filled iff run_exact and n <= exact_limit.
BoundsReport bounds_report(const Graph& g, bool run_exact = false, int exact_limit = 30);

}  // namespace ahg
