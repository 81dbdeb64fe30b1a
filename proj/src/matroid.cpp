#include "conepack/matroid.hpp"

namespace conepack {

PartitionMatroid::PartitionMatroid(std::vector<int> block_of, std::vector<int> caps)
    : block_of_(std::move(block_of)), caps_(std::move(caps)) {
  if (block_of_.empty()) fail(Errc::InvalidArgument, "empty partition matroid");
  std::vector<int> block_sizes(caps_.size(), 0);
  for (int b : block_of_) {
    if (b < 0 || b >= static_cast<int>(caps_.size())) {
      fail(Errc::IndexOutOfRange, "element assigned to a missing block");
    }
    ++block_sizes[b];
  }
  for (size_t b = 0; b < caps_.size(); ++b) {
    if (caps_[b] < 0) fail(Errc::InvalidArgument, "negative block capacity");
    rank_ += std::min(caps_[b], block_sizes[b]);
  }
}

bool PartitionMatroid::independent(const std::vector<int>& elements) const {
  std::vector<int> used(caps_.size(), 0);
  for (int e : elements) {
    if (e < 0 || e >= ground_size()) fail(Errc::IndexOutOfRange, "element out of range");
    if (++used[block_of_[e]] > caps_[block_of_[e]]) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(Digraph graph) : graph_(std::move(graph)) {
  graph_.validate();
  // rank = n - (number of connected components)
  DisjointSet components(graph_.num_nodes);
  int merges = 0;
  for (const GraphEdge& e : graph_.edges) {
    if (components.unite(e.tail, e.head)) ++merges;
  }
  rank_ = merges;
}

bool GraphicMatroid::independent(const std::vector<int>& elements) const {
  DisjointSet components(graph_.num_nodes);
  for (int e : elements) {
    if (e < 0 || e >= ground_size()) fail(Errc::IndexOutOfRange, "edge out of range");
    if (!components.unite(graph_.edges[e].tail, graph_.edges[e].head)) return false;
  }
  return true;
}

}  // namespace conepack
