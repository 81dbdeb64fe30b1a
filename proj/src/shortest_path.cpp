#include "conepack/shortest_path.hpp"

namespace conepack {

std::vector<SsspTree<double>> sssp_batch_serial(const Digraph& graph, const Adjacency& adjacency,
                                                const std::vector<double>& edge_cost,
                                                const std::vector<int>& sources) {
  std::vector<SsspTree<double>> trees(sources.size());
  for (size_t i = 0; i < sources.size(); ++i) {
    trees[i] = dijkstra(graph, adjacency, edge_cost, sources[i]);
  }
  return trees;
}

std::vector<SsspTree<double>> sssp_batch_parallel(const Digraph& graph, const Adjacency& adjacency,
                                                  const std::vector<double>& edge_cost,
                                                  const std::vector<int>& sources) {
  std::vector<SsspTree<double>> trees(sources.size());
  const long count = static_cast<long>(sources.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    trees[i] = dijkstra(graph, adjacency, edge_cost, sources[i]);
  }
  return trees;
}

std::vector<SsspTree<double>> sssp_batch(const Digraph& graph, const Adjacency& adjacency,
                                         const std::vector<double>& edge_cost,
                                         const std::vector<int>& sources) {
  if (sources.size() >= 4 && graph.edges.size() >= 1024) {
    return sssp_batch_parallel(graph, adjacency, edge_cost, sources);
  }
  return sssp_batch_serial(graph, adjacency, edge_cost, sources);
}

}  // namespace conepack
