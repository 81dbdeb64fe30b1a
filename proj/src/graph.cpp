#include "conepack/graph.hpp"

#include <queue>

namespace conepack {

void Digraph::validate() const {
  if (num_nodes <= 0) fail(Errc::InvalidArgument, "graph needs at least one node");
  for (const GraphEdge& e : edges) {
    if (e.tail < 0 || e.tail >= num_nodes || e.head < 0 || e.head >= num_nodes) {
      fail(Errc::IndexOutOfRange, "edge endpoint out of range");
    }
    if (sgn(e.capacity) <= 0) fail(Errc::NonPositiveCapacity, "edge capacity must be positive");
    if (sgn(e.fee) < 0) fail(Errc::InvalidArgument, "edge fee must be non-negative");
  }
  if (source && (*source < 0 || *source >= num_nodes)) fail(Errc::IndexOutOfRange, "bad source");
  if (sink && (*sink < 0 || *sink >= num_nodes)) fail(Errc::IndexOutOfRange, "bad sink");
}

void ProcessingNetwork::validate() const {
  graph.validate();
  if (!graph.source || !graph.sink) {
    fail(Errc::InvalidArgument, "processing network needs a designated source and sink");
  }
  if (alpha.size() != graph.edges.size()) {
    fail(Errc::InvalidArgument, "alpha vector length does not match edge count");
  }
  for (const Rational& value : alpha) {
    if (sgn(value) <= 0 || value > 1) {
      fail(Errc::InvalidArgument, "alpha values must lie in (0,1]");
    }
  }
  if (!topological_order(graph)) {
    fail(Errc::CyclicNetwork, "processing network must be acyclic");
  }
}

Adjacency::Adjacency(const Digraph& graph) : num_nodes_(graph.num_nodes) {
  std::vector<int> out_count(num_nodes_, 0), in_count(num_nodes_, 0);
  for (const GraphEdge& e : graph.edges) {
    ++out_count[e.tail];
    ++in_count[e.head];
  }
  out_start_.assign(num_nodes_ + 1, 0);
  in_start_.assign(num_nodes_ + 1, 0);
  for (int v = 0; v < num_nodes_; ++v) {
    out_start_[v + 1] = out_start_[v] + out_count[v];
    in_start_[v + 1] = in_start_[v] + in_count[v];
  }
  out_edges_.resize(graph.edges.size());
  in_edges_.resize(graph.edges.size());
  std::vector<int> out_cursor(out_start_.begin(), out_start_.end() - 1);
  std::vector<int> in_cursor(in_start_.begin(), in_start_.end() - 1);
  for (int e = 0; e < static_cast<int>(graph.edges.size()); ++e) {
    out_edges_[out_cursor[graph.edges[e].tail]++] = e;
    in_edges_[in_cursor[graph.edges[e].head]++] = e;
  }
}

std::span<const int> Adjacency::out(int node) const {
  return {out_edges_.data() + out_start_[node],
          static_cast<size_t>(out_start_[node + 1] - out_start_[node])};
}

std::span<const int> Adjacency::in(int node) const {
  return {in_edges_.data() + in_start_[node],
          static_cast<size_t>(in_start_[node + 1] - in_start_[node])};
}

std::optional<std::vector<int>> topological_order(const Digraph& graph) {
  std::vector<int> indegree(graph.num_nodes, 0);
  for (const GraphEdge& e : graph.edges) ++indegree[e.head];
  Adjacency adjacency(graph);
  std::queue<int> ready;
  for (int v = 0; v < graph.num_nodes; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<int> order;
  order.reserve(graph.num_nodes);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    order.push_back(v);
    for (int e : adjacency.out(v)) {
      if (--indegree[graph.edges[e].head] == 0) ready.push(graph.edges[e].head);
    }
  }
  if (static_cast<int>(order.size()) != graph.num_nodes) return std::nullopt;
  return order;
}

}  // namespace conepack
