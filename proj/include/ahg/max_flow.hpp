#pragma once

#include <tuple>
#include <vector>

namespace ahg {

struct CutResult {
  long long flow_value = 0;
  std::vector<int> source_side;  // sorted; contains s, never t
};

/// Integer-capacity max-flow solver (Dinic). Arcs are directed; a reverse
/// residual arc is created automatically for each one. A solve rewinds the
/// residual state first, so the same network can be solved repeatedly with
/// different terminals. Solves mutate internal state and must not run
/// concurrently on one instance; distinct instances are independent.
class FlowNetwork {
 public:
  explicit FlowNetwork(int node_count);

  /// Adds a directed arc and returns its id. The running total of all
  /// capacities is kept within the 64-bit range so no sum computed during a
  /// solve (flow value, cut capacity) can overflow.
  int add_arc(int from, int to, long long capacity);

  int node_count() const noexcept { return static_cast<int>(head_.size()); }
  int arc_count() const noexcept { return static_cast<int>(to_.size() / 2); }

  /// Exact max flow from s to t. source_side is the set of nodes reachable
  /// from s in the final residual graph — the canonical minimal min cut. The
  /// min-cut/max-flow equality is checked on every solve.
  CutResult max_flow_min_cut(int s, int t);

  /// Flow routed through arc `id` by the most recent solve.
  long long flow_on_arc(int id) const;

 private:
  void check_node(int v) const;
  bool bfs_levels(int s, int t);
  long long dfs_augment(int v, int t, long long pushed);

  // Paired-arc residual representation: arc 2k is the k-th added arc,
  // arc 2k^1 its reverse. head_/next_ form per-node singly linked lists.
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<long long> cap_;       // residual capacities (mutated by solves)
  std::vector<long long> orig_cap_;  // as added; restored at solve start
  std::vector<int> level_;
  std::vector<int> iter_;
  long long total_capacity_ = 0;
};

FlowNetwork build_network(int nodes,
                          const std::vector<std::tuple<int, int, long long>>& arcs);

}  // namespace ahg
