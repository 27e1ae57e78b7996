#pragma once

#include <span>
#include <vector>

#include "ahg/graph.hpp"

namespace ahg {

struct Coloring {
  std::vector<int> colors;  // one per vertex
  int num_colors = 0;       // 1 + max color; 0 for the null graph
};

struct DegeneracyOrder {
  std::vector<int> order;  // smallest-last: reversal of min-degree removals
  int degeneracy = 0;
};

/// Repeatedly removes a minimum-degree vertex (ties: smallest id) and
/// reverses the removal sequence. Every vertex has at most `degeneracy`
/// neighbors before it in the order, and degeneracy <= ⌊MAD(G)⌋.
DegeneracyOrder degeneracy_order(const Graph& g);

/// Standard greedy along `order`: each vertex takes the smallest color not
/// used by its already-colored neighbors.
Coloring greedy_color(const Graph& g, std::span<const int> order);

/// Exact chromatic number by per-component branch and bound. Refuses graphs
/// larger than `limit` (the search is exponential in the worst case).
int exact_chromatic(const Graph& g, int limit = 30);

/// True iff adjacent vertices always received different colors.
bool validate_coloring(const Graph& g, const Coloring& c);

}  // namespace ahg
