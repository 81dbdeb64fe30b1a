#include "conepack/scheme.hpp"

#include <queue>

namespace conepack {

std::vector<bool> covered_nodes(const ProcessingNetwork& network) {
  const Digraph& graph = network.graph;
  Adjacency adjacency(graph);
  std::vector<bool> forward(graph.num_nodes, false), backward(graph.num_nodes, false);
  auto sweep = [&](int start, bool use_out, std::vector<bool>& mark) {
    std::queue<int> frontier;
    mark[start] = true;
    frontier.push(start);
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int e : use_out ? adjacency.out(v) : adjacency.in(v)) {
        int w = use_out ? graph.edges[e].head : graph.edges[e].tail;
        if (!mark[w]) {
          mark[w] = true;
          frontier.push(w);
        }
      }
    }
  };
  sweep(*graph.source, true, forward);
  sweep(*graph.sink, false, backward);
  std::vector<bool> covered(graph.num_nodes, false);
  for (int v = 0; v < graph.num_nodes; ++v) covered[v] = forward[v] && backward[v];
  return covered;
}

}  // namespace conepack
