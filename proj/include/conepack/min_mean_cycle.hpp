#pragma once

#include <utility>
#include <vector>

#include "conepack/graph.hpp"

namespace conepack {

template <class T>
struct MeanCycle {
  bool found = false;
  std::vector<int> edges;  // edge ids along a simple cycle
  T mean{};
  T total{};
};

// Karp's minimum mean cycle: length-k walk DP from every node (d_0 = 0
// everywhere) and the min-max characterization
//   mu* = min_v max_k (d_n(v) - d_k(v)) / (n - k).
// A simple cycle attaining mu* is recovered by peeling cycles off the
// predecessor walk of the arg-min node.  found = false on acyclic graphs.
template <class T>
MeanCycle<T> karp_min_mean_cycle(const Digraph& graph, const std::vector<T>& edge_cost) {
  const int n = graph.num_nodes;
  const int m = static_cast<int>(graph.edges.size());
  MeanCycle<T> result;
  if (n == 0 || m == 0) return result;

  // walk_value[k][v], defined where has_walk[k][v]; pred[k][v] = edge id.
  std::vector<std::vector<T>> walk_value(n + 1, std::vector<T>(n, T{}));
  std::vector<std::vector<char>> has_walk(n + 1, std::vector<char>(n, 0));
  std::vector<std::vector<int>> pred(n + 1, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) has_walk[0][v] = 1;

  for (int k = 1; k <= n; ++k) {
    for (int e = 0; e < m; ++e) {
      const GraphEdge& edge = graph.edges[e];
      if (!has_walk[k - 1][edge.tail]) continue;
      T candidate = walk_value[k - 1][edge.tail] + edge_cost[e];
      if (!has_walk[k][edge.head] || candidate < walk_value[k][edge.head]) {
        has_walk[k][edge.head] = 1;
        walk_value[k][edge.head] = std::move(candidate);
        pred[k][edge.head] = e;
      }
    }
  }

  int best_node = -1;
  T best_mean{};
  bool have_best = false;
  for (int v = 0; v < n; ++v) {
    if (!has_walk[n][v]) continue;
    T node_mean{};
    bool have_node = false;
    for (int k = 0; k < n; ++k) {
      if (!has_walk[k][v]) continue;
      T ratio = (walk_value[n][v] - walk_value[k][v]) / T(n - k);
      if (!have_node || node_mean < ratio) {
        node_mean = std::move(ratio);
        have_node = true;
      }
    }
    if (!have_node) continue;
    if (!have_best || node_mean < best_mean) {
      best_mean = std::move(node_mean);
      best_node = v;
      have_best = true;
    }
  }
  if (!have_best) return result;  // acyclic: no walk of length n exists

  // Predecessor walk of length n ending at best_node.
  std::vector<int> nodes(n + 1);
  std::vector<int> edges(n);
  nodes[n] = best_node;
  for (int k = n; k >= 1; --k) {
    const int e = pred[k][nodes[k]];
    edges[k - 1] = e;
    nodes[k - 1] = graph.edges[e].tail;
  }

  // Peel simple cycles off the walk.  The first repeated node closes a
  // simple cycle; an attained minimum-mean cycle must show up before the
  // walk runs out of repeats.
  while (true) {
    std::vector<int> seen_at(n, -1);
    int from = -1, to = -1;
    for (int pos = 0; pos < static_cast<int>(nodes.size()); ++pos) {
      const int v = nodes[pos];
      if (seen_at[v] >= 0) {
        from = seen_at[v];
        to = pos;
        break;
      }
      seen_at[v] = pos;
    }
    if (from < 0) {
      fail(Errc::Internal, "predecessor walk contained no cycle of minimum mean");
    }
    T total{};
    for (int k = from; k < to; ++k) total += edge_cost[edges[k]];
    T mean = total / T(to - from);
    if (mean == best_mean) {
      result.found = true;
      result.edges.assign(edges.begin() + from, edges.begin() + to);
      result.mean = std::move(mean);
      result.total = std::move(total);
      return result;
    }
    nodes.erase(nodes.begin() + from + 1, nodes.begin() + to + 1);
    edges.erase(edges.begin() + from, edges.begin() + to);
  }
}

}  // namespace conepack
