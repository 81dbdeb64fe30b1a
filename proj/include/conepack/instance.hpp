#pragma once

#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "conepack/errors.hpp"
#include "conepack/rational.hpp"

namespace conepack {

// x * r for the numeric types the algorithms are generic over (double,
// Rational, Affine); doubles take the rounded factor.
template <class T>
T scale_term(const T& x, const Rational& r) {
  if constexpr (std::is_same_v<T, double>) {
    return x * to_double(r);
  } else {
    return T(x * r);
  }
}

struct Triple {
  int row = 0;
  int col = 0;
  Rational value;
};

// Sparse packing instance max{c^T x : Ax <= b, x in C}. A is non-negative
// with at least one stored entry in every row and every column; b > 0.
class PackingInstance {
 public:
  struct Entry {
    int index = 0;   // column for row-major access, row for column-major
    Rational value;  // strictly positive
    double value_d = 0.0;
  };

  PackingInstance(int num_rows, int num_cols, std::vector<Triple> triples,
                  std::vector<Rational> capacities, std::vector<Rational> costs);

  int rows() const { return num_rows_; }
  int cols() const { return num_cols_; }
  long nnz() const { return nnz_; }

  std::span<const Entry> row(int i) const;
  std::span<const Entry> column(int j) const;

  const std::vector<Rational>& capacities() const { return capacities_; }
  const std::vector<Rational>& costs() const { return costs_; }
  const std::vector<double>& capacities_d() const { return capacities_d_; }
  const std::vector<double>& costs_d() const { return costs_d_; }
  const std::vector<Triple>& triples() const { return triples_; }

 private:
  int num_rows_ = 0;
  int num_cols_ = 0;
  long nnz_ = 0;
  std::vector<Triple> triples_;
  std::vector<Rational> capacities_;
  std::vector<Rational> costs_;
  std::vector<double> capacities_d_;
  std::vector<double> costs_d_;
  // CSR / CSC style adjacency built once at construction.
  std::vector<Entry> row_entries_;
  std::vector<long> row_start_;
  std::vector<Entry> col_entries_;
  std::vector<long> col_start_;
};

PackingInstance new_instance(int num_rows, int num_cols, std::vector<Triple> triples,
                             std::vector<Rational> capacities, std::vector<Rational> costs);

// One element of the cone's ground set S: sparse, non-negative, non-zero.
class Generator {
 public:
  explicit Generator(std::vector<std::pair<int, Rational>> entries);

  const std::vector<std::pair<int, Rational>>& entries() const { return entries_; }

  double dot(std::span<const double> d) const;
  Rational dot(const std::vector<Rational>& d) const;

  template <class T>
  T dot_generic(const std::vector<T>& d) const {
    T total{};
    for (const auto& [index, value] : entries_) {
      total += scale_term(d[index], value);
    }
    return total;
  }

  Rational max_entry() const;
  int max_index() const { return entries_.empty() ? -1 : entries_.back().first; }
  bool operator==(const Generator& other) const { return entries_ == other.entries_; }

 private:
  std::vector<std::pair<int, Rational>> entries_;  // sorted by index, values > 0
};

// epsilon in (0,1), epsilon' = epsilon/2, delta = (1+e')/((1+e')m)^(1/e').
struct ApproxParams {
  Rational epsilon;
  Rational epsilon_prime;
  double delta = 0.0;
  int num_rows = 0;

  static ApproxParams make(const Rational& epsilon, int num_rows);
  double epsilon_d() const { return to_double(epsilon); }
  double epsilon_prime_d() const { return to_double(epsilon_prime); }
};

struct DualState {
  std::vector<double> y;           // strictly positive dual weights
  std::vector<double> a;           // reduced costs a_j = sum_i y_i A_ij
  std::vector<double> raw_primal;  // unscaled accumulated solution
  double dual_value = 0.0;         // sum_i b_i y_i
  long iterations = 0;
};

DualState init_duals(const PackingInstance& instance, const ApproxParams& params);

std::vector<double> compute_reduced_costs(const PackingInstance& instance,
                                          std::span<const double> y);
std::vector<Rational> compute_reduced_costs_exact(const PackingInstance& instance,
                                                  const std::vector<Rational>& y);

struct SolveStep {
  enum class Kind { Augment, BoundRaise };
  Kind kind = Kind::Augment;
  std::optional<Generator> generator;  // present for augment steps
  double nu = 0.0;                     // step size, > 0 for augments
  double lambda_lower = 0.0;           // lower-bound trace at this step
};

struct SolveLog {
  std::vector<SolveStep> steps;
  long augment_steps = 0;
  long bound_raises = 0;
  double lambda_lower_initial = 0.0;
  double lambda_lower_final = 0.0;
  double final_scale = 0.0;
};

struct Solution {
  std::vector<double> x;
  double objective = 0.0;
  bool feasible = false;
  long iterations = 0;
  long oracle_calls = 0;
};

}  // namespace conepack
