#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "conepack/graph.hpp"

namespace conepack {

template <class T>
struct MstResult {
  std::vector<int> edges;
  T total{};
};

// Kruskal with union-find; edges are treated as undirected.  Ties between
// equal costs break toward the smaller edge index.
template <class T>
MstResult<T> kruskal_mst(const Digraph& graph, const std::vector<T>& edge_cost) {
  std::vector<int> order(graph.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    if (edge_cost[lhs] < edge_cost[rhs]) return true;
    if (edge_cost[rhs] < edge_cost[lhs]) return false;
    return lhs < rhs;
  });
  MstResult<T> result;
  DisjointSet components(graph.num_nodes);
  for (int e : order) {
    if (components.unite(graph.edges[e].tail, graph.edges[e].head)) {
      result.edges.push_back(e);
      result.total += edge_cost[e];
    }
  }
  if (static_cast<int>(result.edges.size()) != graph.num_nodes - 1) {
    fail(Errc::Disconnected, "graph is not connected");
  }
  std::sort(result.edges.begin(), result.edges.end());
  return result;
}

}  // namespace conepack
