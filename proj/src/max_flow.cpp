#include "ahg/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

#include "ahg/errors.hpp"

namespace ahg {

FlowNetwork::FlowNetwork(int node_count) {
  if (node_count < 0)
    fail(errc::invalid_arc, "node count " + std::to_string(node_count) + " is negative");
  head_.assign(static_cast<size_t>(node_count), -1);
}

void FlowNetwork::check_node(int v) const {
  if (v < 0 || v >= node_count())
    fail(errc::invalid_arc,
         "node " + std::to_string(v) + " with node count " + std::to_string(node_count()));
}

int FlowNetwork::add_arc(int from, int to, long long capacity) {
  check_node(from);
  check_node(to);
  if (from == to) fail(errc::invalid_arc, "arc " + std::to_string(from) + " to itself");
  if (capacity < 0)
    fail(errc::invalid_arc, "negative capacity " + std::to_string(capacity));
  if (capacity > std::numeric_limits<long long>::max() - total_capacity_)
    fail(errc::too_large, "total capacity exceeds the 64-bit range");
  total_capacity_ += capacity;

  int id = static_cast<int>(to_.size());
  to_.push_back(to);
  cap_.push_back(capacity);
  orig_cap_.push_back(capacity);
  next_.push_back(head_[static_cast<size_t>(from)]);
  head_[static_cast<size_t>(from)] = id;

  to_.push_back(from);
  cap_.push_back(0);
  orig_cap_.push_back(0);
  next_.push_back(head_[static_cast<size_t>(to)]);
  head_[static_cast<size_t>(to)] = id + 1;
  return id / 2;
}

bool FlowNetwork::bfs_levels(int s, int t) {
  level_.assign(head_.size(), -1);
  std::queue<int> frontier;
  level_[static_cast<size_t>(s)] = 0;
  frontier.push(s);
  while (!frontier.empty()) {
    int v = frontier.front();
    frontier.pop();
    for (int a = head_[static_cast<size_t>(v)]; a != -1; a = next_[static_cast<size_t>(a)]) {
      int w = to_[static_cast<size_t>(a)];
      if (cap_[static_cast<size_t>(a)] > 0 && level_[static_cast<size_t>(w)] < 0) {
        level_[static_cast<size_t>(w)] = level_[static_cast<size_t>(v)] + 1;
        frontier.push(w);
      }
    }
  }
  return level_[static_cast<size_t>(t)] >= 0;
}

long long FlowNetwork::dfs_augment(int v, int t, long long pushed) {
  if (v == t) return pushed;
  for (int& a = iter_[static_cast<size_t>(v)]; a != -1; a = next_[static_cast<size_t>(a)]) {
    int w = to_[static_cast<size_t>(a)];
    if (cap_[static_cast<size_t>(a)] <= 0 ||
        level_[static_cast<size_t>(w)] != level_[static_cast<size_t>(v)] + 1)
      continue;
    long long got = dfs_augment(w, t, std::min(pushed, cap_[static_cast<size_t>(a)]));
    if (got > 0) {
      cap_[static_cast<size_t>(a)] -= got;
      cap_[static_cast<size_t>(a ^ 1)] += got;
      return got;
    }
  }
  return 0;
}

CutResult FlowNetwork::max_flow_min_cut(int s, int t) {
  check_node(s);
  check_node(t);
  if (s == t) fail(errc::source_equals_sink, "node " + std::to_string(s));

  cap_ = orig_cap_;
  long long flow = 0;
  while (bfs_levels(s, t)) {
    iter_ = head_;
    while (long long got = dfs_augment(s, t, std::numeric_limits<long long>::max()))
      flow += got;
  }

  // Final-residual reachability from s; the last bfs_levels already computed
  // it (it returned false, so t is unreachable).
  CutResult result;
  result.flow_value = flow;
  for (int v = 0; v < node_count(); ++v)
    if (level_[static_cast<size_t>(v)] >= 0) result.source_side.push_back(v);

  long long cut_capacity = 0;
  for (size_t a = 0; a < to_.size(); a += 2) {
    int from = to_[a ^ 1];
    int to = to_[a];
    if (level_[static_cast<size_t>(from)] >= 0 && level_[static_cast<size_t>(to)] < 0)
      cut_capacity += orig_cap_[a];
  }
  if (cut_capacity != flow)
    throw std::logic_error("max-flow/min-cut mismatch: flow " + std::to_string(flow) +
                           ", cut " + std::to_string(cut_capacity));
  return result;
}

long long FlowNetwork::flow_on_arc(int id) const {
  if (id < 0 || id >= arc_count())
    fail(errc::invalid_arc, "arc id " + std::to_string(id));
  size_t a = static_cast<size_t>(id) * 2;
  return orig_cap_[a] - cap_[a];
}

FlowNetwork build_network(int nodes,
                          const std::vector<std::tuple<int, int, long long>>& arcs) {
  FlowNetwork net(nodes);
  for (auto [from, to, cap] : arcs) net.add_arc(from, to, cap);
  return net;
}

}  // namespace ahg
