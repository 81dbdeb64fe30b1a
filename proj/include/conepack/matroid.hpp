#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <vector>

#include "conepack/errors.hpp"
#include "conepack/graph.hpp"

namespace conepack {

// Matroid described by an independence-testing oracle over ground set
// {0, ..., size-1} with a declared rank.
class Matroid {
 public:
  virtual ~Matroid() = default;
  virtual int ground_size() const = 0;
  virtual int rank() const = 0;
  virtual bool independent(const std::vector<int>& elements) const = 0;
};

class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int rank, int size) : rank_(rank), size_(size) {
    if (rank < 0 || rank > size || size <= 0) fail(Errc::InvalidArgument, "bad uniform matroid");
  }
  int ground_size() const override { return size_; }
  int rank() const override { return rank_; }
  bool independent(const std::vector<int>& elements) const override {
    return static_cast<int>(elements.size()) <= rank_;
  }

 private:
  int rank_, size_;
};

class FreeMatroid : public UniformMatroid {
 public:
  explicit FreeMatroid(int size) : UniformMatroid(size, size) {}
};

// Independent sets pick at most cap_b elements from each block.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(std::vector<int> block_of, std::vector<int> caps);
  int ground_size() const override { return static_cast<int>(block_of_.size()); }
  int rank() const override { return rank_; }
  bool independent(const std::vector<int>& elements) const override;

 private:
  std::vector<int> block_of_;
  std::vector<int> caps_;
  int rank_ = 0;
};

// Forests of an undirected graph; edges indexed like the graph's edge list.
class GraphicMatroid : public Matroid {
 public:
  explicit GraphicMatroid(Digraph graph);
  int ground_size() const override { return static_cast<int>(graph_.edges.size()); }
  int rank() const override { return rank_; }
  bool independent(const std::vector<int>& elements) const override;
  const Digraph& graph() const { return graph_; }

 private:
  Digraph graph_;
  int rank_ = 0;
};

// Greedy minimum-cost basis: sort by cost (ties toward smaller index) and
// keep every element that preserves independence.
template <class T>
std::vector<int> min_weight_basis(const Matroid& matroid, const std::vector<T>& cost) {
  std::vector<int> order(matroid.ground_size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    if (cost[lhs] < cost[rhs]) return true;
    if (cost[rhs] < cost[lhs]) return false;
    return lhs < rhs;
  });
  std::vector<int> basis;
  for (int element : order) {
    if (static_cast<int>(basis.size()) == matroid.rank()) break;
    basis.push_back(element);
    if (!matroid.independent(basis)) basis.pop_back();
  }
  if (static_cast<int>(basis.size()) != matroid.rank()) {
    fail(Errc::RankDeficient, "greedy accepted fewer elements than the declared rank");
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

}  // namespace conepack
