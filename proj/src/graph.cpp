#include "ahg/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ahg/errors.hpp"

namespace ahg {

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : n_(n) {
  if (n < 0) fail(errc::vertex_out_of_range, "vertex count " + std::to_string(n) + " is negative");
  for (auto& [u, v] : edge_list) {
    if (u == v) fail(errc::self_loop, "edge " + pair_str(u, v));
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(errc::vertex_out_of_range,
           "edge " + pair_str(u, v) + " with vertex count " + std::to_string(n));
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  auto dup = std::adjacent_find(edge_list.begin(), edge_list.end());
  if (dup != edge_list.end())
    fail(errc::duplicate_edge, "edge " + pair_str(dup->first, dup->second));
  edges_ = std::move(edge_list);

  std::vector<int> deg(n_, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  adj_offset_.assign(n_ + 1, 0);
  for (int v = 0; v < n_; ++v) adj_offset_[v + 1] = adj_offset_[v] + deg[v];
  adj_.resize(static_cast<size_t>(adj_offset_[n_]));
  std::vector<int> cursor(adj_offset_.begin(), adj_offset_.end() - 1);
  for (auto [u, v] : edges_) {
    adj_[static_cast<size_t>(cursor[u]++)] = v;
    adj_[static_cast<size_t>(cursor[v]++)] = u;
  }
  for (int v = 0; v < n_; ++v)
    std::sort(adj_.begin() + adj_offset_[v], adj_.begin() + adj_offset_[v + 1]);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail(errc::vertex_out_of_range,
         "vertex " + std::to_string(v) + " with vertex count " + std::to_string(n_));
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return {adj_.data() + adj_offset_[v],
          static_cast<size_t>(adj_offset_[v + 1] - adj_offset_[v])};
}

int Graph::degree(int v) const {
  check_vertex(v);
  return adj_offset_[v + 1] - adj_offset_[v];
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Fraction average_degree(const Graph& g) {
  if (g.vertex_count() == 0) return Fraction(0);
  return Fraction(2LL * g.edge_count(), g.vertex_count());
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep) {
  std::vector<int> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int v : ids)
    if (v < 0 || v >= g.vertex_count())
      fail(errc::vertex_out_of_range,
           "vertex " + std::to_string(v) + " with vertex count " +
               std::to_string(g.vertex_count()));

  std::vector<int> new_id(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < ids.size(); ++i) new_id[static_cast<size_t>(ids[i])] = static_cast<int>(i);

  std::vector<std::pair<int, int>> sub_edges;
  for (auto [u, v] : g.edges()) {
    int nu = new_id[static_cast<size_t>(u)];
    int nv = new_id[static_cast<size_t>(v)];
    if (nu >= 0 && nv >= 0) sub_edges.emplace_back(nu, nv);
  }
  return {Graph(static_cast<int>(ids.size()), std::move(sub_edges)), std::move(ids)};
}

int cut_size(const Graph& g, std::span<const int> s_side) {
  std::vector<char> in_s(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : s_side) {
    if (v < 0 || v >= g.vertex_count())
      fail(errc::vertex_out_of_range,
           "vertex " + std::to_string(v) + " with vertex count " +
               std::to_string(g.vertex_count()));
    in_s[static_cast<size_t>(v)] = 1;
  }
  int crossing = 0;
  for (auto [u, v] : g.edges())
    if (in_s[static_cast<size_t>(u)] != in_s[static_cast<size_t>(v)]) ++crossing;
  return crossing;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> parts;
  for (int start = 0; start < n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> part;
    std::queue<int> frontier;
    frontier.push(start);
    seen[static_cast<size_t>(start)] = 1;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      part.push_back(v);
      for (int w : g.neighbors(v)) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          frontier.push(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;  // starts are scanned in ascending order, so parts are ordered by minimum
}

DegreeStats degree_stats(const Graph& g) {
  if (g.vertex_count() == 0) fail(errc::empty_graph, "degree_stats");
  DegreeStats st;
  st.min_degree = g.degree(0);
  st.max_degree = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) {
    int d = g.degree(v);
    st.min_degree = std::min(st.min_degree, d);
    st.max_degree = std::max(st.max_degree, d);
  }
  if (st.min_degree == st.max_degree) st.regular_k = st.min_degree;
  return st;
}

}  // namespace ahg
