#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ahg/fraction.hpp"

namespace ahg {

/// Immutable simple undirected graph on dense vertex ids 0..n-1.
/// Edges are stored canonically (u < v, sorted) and the adjacency structure
/// is derived once at construction. Instances never mutate after
/// construction, so they are safe to share across threads.
class Graph {
 public:
  Graph() = default;  // the null graph (n = 0, no edges)

  /// Validates and normalizes an edge list. Rejects self-loops, duplicate
  /// edges (in either orientation) and endpoints >= n; the error message
  /// names the offending pair.
  Graph(int n, std::vector<std::pair<int, int>> edge_list);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

  /// Canonical edge list: each pair has first < second, lexicographically sorted.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  /// Sorted neighbor ids of v.
  std::span<const int> neighbors(int v) const;

  int degree(int v) const;
  bool adjacent(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> adj_;         // concatenated sorted neighbor lists
  std::vector<int> adj_offset_;  // size n_+1
};

/// d(G) = 2|E|/|V| as an exact fraction; 0/1 for the null graph.
Fraction average_degree(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original_ids;  // new id i corresponds to original_ids[i]
};

/// Subgraph induced by `keep` (duplicates tolerated), reindexed to dense ids
/// in ascending original order. The remap back to the input graph rides along.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep);

/// Number of edges with exactly one endpoint in s_side.
int cut_size(const Graph& g, std::span<const int> s_side);

/// Partition of the vertices into maximal connected sets, each sorted,
/// ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  std::optional<int> regular_k;  // set iff all degrees are equal
};

/// Exact degree extremes; requires n >= 1.
DegreeStats degree_stats(const Graph& g);

}  // namespace ahg
