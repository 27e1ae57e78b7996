#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ahg/fraction.hpp"
#include "ahg/graph.hpp"

namespace ahg {

struct DensestResult {
  std::vector<int> subgraph_vertices;  // sorted, nonempty
  Fraction density;                    // |E(S)| / |S|
  Fraction mad;                        // 2 * density
};

struct AhVerdict {
  bool is_ah = true;
  std::optional<DensestResult> witness;  // present iff is_ah is false
};

/// Decides whether some nonempty S has |E(S)|/|S| > guess, via one min-cut on
/// the Goldberg network. When feasible, the returned vertex set is such an S
/// (source side of the canonical min cut, source dropped); otherwise empty.
std::pair<bool, std::vector<int>> goldberg_feasible(const Graph& g, Fraction guess);

/// Exact densest subgraph by binary search over guesses. Ties are broken by
/// the canonical minimal min-cut source side (deterministic).
DensestResult densest_subgraph(const Graph& g);

/// MAD(G) = 2 * max subgraph density, exact.
Fraction mad(const Graph& g);

/// Exhaustive reference maximizer over all nonempty vertex subsets (n <= 20);
/// ties broken toward the lexicographically smallest vertex list.
DensestResult mad_bruteforce(const Graph& g);

/// d(G) = MAD(G) test, exact. The witness on failure is the densest subgraph.
AhVerdict is_average_hereditary(const Graph& g);

}  // namespace ahg
