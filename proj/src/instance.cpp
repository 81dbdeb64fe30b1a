#include "conepack/instance.hpp"

#include <algorithm>
#include <cmath>

#include "conepack/kernels.hpp"

namespace conepack {

PackingInstance::PackingInstance(int num_rows, int num_cols, std::vector<Triple> triples,
                                 std::vector<Rational> capacities, std::vector<Rational> costs)
    : num_rows_(num_rows),
      num_cols_(num_cols),
      triples_(std::move(triples)),
      capacities_(std::move(capacities)),
      costs_(std::move(costs)) {
  if (num_rows_ <= 0 || num_cols_ <= 0) {
    fail(Errc::InvalidArgument, "instance dimensions must be positive");
  }
  if (static_cast<int>(capacities_.size()) != num_rows_) {
    fail(Errc::InvalidArgument, "capacity vector length does not match row count");
  }
  if (static_cast<int>(costs_.size()) != num_cols_) {
    fail(Errc::InvalidArgument, "cost vector length does not match column count");
  }
  for (const Rational& b : capacities_) {
    if (sgn(b) <= 0) fail(Errc::NonPositiveCapacity, "capacity " + to_string(b) + " is not positive");
  }
  for (const Triple& t : triples_) {
    if (t.row < 0 || t.row >= num_rows_ || t.col < 0 || t.col >= num_cols_) {
      fail(Errc::IndexOutOfRange, "matrix entry out of range");
    }
    if (sgn(t.value) < 0) fail(Errc::NegativeMatrixEntry, "negative matrix entry");
    if (sgn(t.value) == 0) fail(Errc::NegativeMatrixEntry, "zero matrix entries must not be stored");
  }
  std::sort(triples_.begin(), triples_.end(), [](const Triple& lhs, const Triple& rhs) {
    return std::pair(lhs.row, lhs.col) < std::pair(rhs.row, rhs.col);
  });
  for (size_t k = 1; k < triples_.size(); ++k) {
    if (triples_[k].row == triples_[k - 1].row && triples_[k].col == triples_[k - 1].col) {
      fail(Errc::DuplicateEntry, "duplicate matrix entry");
    }
  }
  nnz_ = static_cast<long>(triples_.size());

  std::vector<long> row_count(num_rows_, 0), col_count(num_cols_, 0);
  for (const Triple& t : triples_) {
    ++row_count[t.row];
    ++col_count[t.col];
  }
  for (int i = 0; i < num_rows_; ++i) {
    if (row_count[i] == 0) fail(Errc::EmptyRowOrColumn, "row " + std::to_string(i) + " has no entries");
  }
  for (int j = 0; j < num_cols_; ++j) {
    if (col_count[j] == 0) fail(Errc::EmptyRowOrColumn, "column " + std::to_string(j) + " has no entries");
  }

  row_start_.assign(num_rows_ + 1, 0);
  for (int i = 0; i < num_rows_; ++i) row_start_[i + 1] = row_start_[i] + row_count[i];
  row_entries_.resize(triples_.size());
  {
    std::vector<long> cursor(row_start_.begin(), row_start_.end() - 1);
    for (const Triple& t : triples_) {
      row_entries_[cursor[t.row]++] = Entry{t.col, t.value, to_double(t.value)};
    }
  }
  col_start_.assign(num_cols_ + 1, 0);
  for (int j = 0; j < num_cols_; ++j) col_start_[j + 1] = col_start_[j] + col_count[j];
  col_entries_.resize(triples_.size());
  {
    std::vector<long> cursor(col_start_.begin(), col_start_.end() - 1);
    for (const Triple& t : triples_) {
      col_entries_[cursor[t.col]++] = Entry{t.row, t.value, to_double(t.value)};
    }
  }

  capacities_d_.reserve(num_rows_);
  for (const Rational& b : capacities_) capacities_d_.push_back(to_double(b));
  costs_d_.reserve(num_cols_);
  for (const Rational& c : costs_) costs_d_.push_back(to_double(c));
}

std::span<const PackingInstance::Entry> PackingInstance::row(int i) const {
  return {row_entries_.data() + row_start_[i], static_cast<size_t>(row_start_[i + 1] - row_start_[i])};
}

std::span<const PackingInstance::Entry> PackingInstance::column(int j) const {
  return {col_entries_.data() + col_start_[j], static_cast<size_t>(col_start_[j + 1] - col_start_[j])};
}

PackingInstance new_instance(int num_rows, int num_cols, std::vector<Triple> triples,
                             std::vector<Rational> capacities, std::vector<Rational> costs) {
  return PackingInstance(num_rows, num_cols, std::move(triples), std::move(capacities), std::move(costs));
}

Generator::Generator(std::vector<std::pair<int, Rational>> entries) : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
  std::vector<std::pair<int, Rational>> merged;
  merged.reserve(entries_.size());
  for (auto& [index, value] : entries_) {
    if (index < 0) fail(Errc::IndexOutOfRange, "generator index out of range");
    if (sgn(value) < 0) fail(Errc::InvalidArgument, "generator entries must be non-negative");
    if (sgn(value) == 0) continue;
    if (!merged.empty() && merged.back().first == index) {
      merged.back().second += value;
    } else {
      merged.emplace_back(index, std::move(value));
    }
  }
  entries_ = std::move(merged);
  if (entries_.empty()) fail(Errc::ZeroGenerator, "generator has no positive entry");
}

double Generator::dot(std::span<const double> d) const {
  double total = 0.0;
  for (const auto& [index, value] : entries_) total += d[index] * to_double(value);
  return total;
}

Rational Generator::dot(const std::vector<Rational>& d) const {
  Rational total = 0;
  for (const auto& [index, value] : entries_) total += d[index] * value;
  return total;
}

Rational Generator::max_entry() const {
  Rational best = entries_.front().second;
  for (const auto& [index, value] : entries_) {
    if (value > best) best = value;
  }
  return best;
}

ApproxParams ApproxParams::make(const Rational& epsilon, int num_rows) {
  if (sgn(epsilon) <= 0 || epsilon >= 1) {
    fail(Errc::InvalidArgument, "epsilon must lie in (0,1), got " + to_string(epsilon));
  }
  if (num_rows <= 0) fail(Errc::InvalidArgument, "instance must have at least one row");
  ApproxParams params;
  params.epsilon = epsilon;
  params.epsilon_prime = epsilon / 2;
  params.num_rows = num_rows;
  const double ep = params.epsilon_prime_d();
  params.delta = (1.0 + ep) / std::pow((1.0 + ep) * num_rows, 1.0 / ep);
  if (!(params.delta > 0.0)) {
    fail(Errc::InvalidArgument, "delta underflows for this (epsilon, m) combination");
  }
  return params;
}

DualState init_duals(const PackingInstance& instance, const ApproxParams& params) {
  DualState state;
  state.y.resize(instance.rows());
  for (int i = 0; i < instance.rows(); ++i) {
    state.y[i] = params.delta / instance.capacities_d()[i];
  }
  state.a = compute_reduced_costs(instance, state.y);
  state.raw_primal.assign(instance.cols(), 0.0);
  state.dual_value = kernels::dual_value(instance.capacities_d(), state.y);
  return state;
}

std::vector<double> compute_reduced_costs(const PackingInstance& instance,
                                          std::span<const double> y) {
  if (static_cast<int>(y.size()) != instance.rows()) {
    fail(Errc::InvalidArgument, "dual vector length does not match row count");
  }
  for (double value : y) {
    if (!(value > 0.0)) fail(Errc::NonPositiveDual, "dual weights must stay positive");
  }
  std::vector<double> a(instance.cols());
  kernels::reduced_costs(instance, y, a);
  return a;
}

std::vector<Rational> compute_reduced_costs_exact(const PackingInstance& instance,
                                                  const std::vector<Rational>& y) {
  if (static_cast<int>(y.size()) != instance.rows()) {
    fail(Errc::InvalidArgument, "dual vector length does not match row count");
  }
  for (const Rational& value : y) {
    if (sgn(value) <= 0) fail(Errc::NonPositiveDual, "dual weights must stay positive");
  }
  std::vector<Rational> a(instance.cols(), Rational(0));
  for (int j = 0; j < instance.cols(); ++j) {
    for (const auto& entry : instance.column(j)) {
      a[j] += y[entry.index] * entry.value;
    }
  }
  return a;
}

}  // namespace conepack
