#pragma once

#include <optional>
#include <span>
#include <vector>

#include "conepack/errors.hpp"
#include "conepack/rational.hpp"

namespace conepack {

struct GraphEdge {
  int tail = 0;
  int head = 0;
  Rational capacity;  // u_e > 0
  Rational cost;      // c_e, any sign
  Rational fee;       // b_e >= 0 (budget row coefficient)
};

// Directed multigraph; treated as undirected by the spanning-tree code.
struct Digraph {
  int num_nodes = 0;
  std::vector<GraphEdge> edges;
  std::optional<int> source;
  std::optional<int> sink;

  void validate() const;
};

struct Commodity {
  int source = 0;
  int sink = 0;
  Rational demand = 1;  // concurrent flow
  Rational weight = 1;  // weighted multicommodity
};

// Acyclic network with per-edge outflow ratios alpha_e in (0,1].
struct ProcessingNetwork {
  Digraph graph;
  std::vector<Rational> alpha;  // indexed like graph.edges

  void validate() const;
};

// CSR-style out-edge (and in-edge) lists over edge ids.
class Adjacency {
 public:
  explicit Adjacency(const Digraph& graph);
  std::span<const int> out(int node) const;
  std::span<const int> in(int node) const;
  int num_nodes() const { return num_nodes_; }

 private:
  int num_nodes_ = 0;
  std::vector<int> out_edges_, out_start_;
  std::vector<int> in_edges_, in_start_;
};

class DisjointSet {
 public:
  explicit DisjointSet(int size) : parent_(size), rank_(size, 0) {
    for (int i = 0; i < size; ++i) parent_[i] = i;
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (rank_[rx] < rank_[ry]) std::swap(rx, ry);
    parent_[ry] = rx;
    if (rank_[rx] == rank_[ry]) ++rank_[rx];
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

// Topological order of all nodes; empty optional when the graph has a cycle.
std::optional<std::vector<int>> topological_order(const Digraph& graph);

}  // namespace conepack
