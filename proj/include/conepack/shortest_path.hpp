#pragma once

#include <queue>
#include <vector>

#include "conepack/graph.hpp"

namespace conepack {

template <class T>
struct SsspTree {
  std::vector<bool> reached;
  std::vector<T> dist;
  std::vector<int> parent_edge;  // -1 at the source / unreached nodes
};

// Binary-heap Dijkstra; costs must be non-negative.  Ties between equal
// distances break toward the smaller node index for deterministic trees.
template <class T>
SsspTree<T> dijkstra(const Digraph& graph, const Adjacency& adjacency,
                     const std::vector<T>& edge_cost, int source) {
  const int n = graph.num_nodes;
  SsspTree<T> tree;
  tree.reached.assign(n, false);
  tree.dist.assign(n, T{});
  tree.parent_edge.assign(n, -1);

  std::vector<bool> settled(n, false);
  using Item = std::pair<T, int>;
  auto greater = [](const Item& lhs, const Item& rhs) {
    if (lhs.first > rhs.first) return true;
    if (rhs.first > lhs.first) return false;
    return lhs.second > rhs.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(greater)> heap(greater);
  tree.reached[source] = true;
  heap.emplace(T{}, source);
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (settled[v]) continue;
    settled[v] = true;
    for (int e : adjacency.out(v)) {
      const GraphEdge& edge = graph.edges[e];
      if (settled[edge.head]) continue;
      T candidate = d + edge_cost[e];
      if (!tree.reached[edge.head] || candidate < tree.dist[edge.head]) {
        tree.reached[edge.head] = true;
        tree.dist[edge.head] = candidate;
        tree.parent_edge[edge.head] = e;
        heap.emplace(tree.dist[edge.head], edge.head);
      }
    }
  }
  return tree;
}

// Edge ids of the tree path from source to target, in travel order.
template <class T>
std::vector<int> tree_path(const Digraph& graph, const SsspTree<T>& tree, int target) {
  if (!tree.reached[target]) fail(Errc::NoPath, "target unreachable");
  std::vector<int> path;
  int v = target;
  while (tree.parent_edge[v] != -1) {
    path.push_back(tree.parent_edge[v]);
    v = graph.edges[tree.parent_edge[v]].tail;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Batched single-source runs for the multicommodity oracles; the parallel
// variant fans sources across threads and produces identical trees.
std::vector<SsspTree<double>> sssp_batch_serial(const Digraph& graph, const Adjacency& adjacency,
                                                const std::vector<double>& edge_cost,
                                                const std::vector<int>& sources);
std::vector<SsspTree<double>> sssp_batch_parallel(const Digraph& graph, const Adjacency& adjacency,
                                                  const std::vector<double>& edge_cost,
                                                  const std::vector<int>& sources);
std::vector<SsspTree<double>> sssp_batch(const Digraph& graph, const Adjacency& adjacency,
                                         const std::vector<double>& edge_cost,
                                         const std::vector<int>& sources);

}  // namespace conepack
