#pragma once

#include <utility>
#include <vector>

#include "ahg/graph.hpp"

// Small named graphs shared across the test binaries.
namespace testgraphs {

inline ahg::Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return ahg::Graph(n, std::move(edges));
}

inline ahg::Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return ahg::Graph(n, std::move(edges));
}

inline ahg::Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return ahg::Graph(n, std::move(edges));
}

// Center 0, leaves 1..leaves.
inline ahg::Graph star(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return ahg::Graph(leaves + 1, std::move(edges));
}

inline ahg::Graph petersen() {
  // Outer C5 on 0..4, inner pentagram on 5..9, spokes i -- i+5.
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return ahg::Graph(10, std::move(edges));
}

// K7 on 0..6 plus K3 on 7..9.
inline ahg::Graph k7_union_k3() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 7; ++u)
    for (int v = u + 1; v < 7; ++v) edges.emplace_back(u, v);
  for (int u = 7; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v) edges.emplace_back(u, v);
  return ahg::Graph(10, std::move(edges));
}

}  // namespace testgraphs
