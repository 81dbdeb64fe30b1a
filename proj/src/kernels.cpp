#include "conepack/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "conepack/instance.hpp"

namespace conepack::kernels {

void reduced_costs_serial(const PackingInstance& instance, std::span<const double> y,
                          std::span<double> a) {
  const int n = instance.cols();
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (const auto& entry : instance.column(j)) {
      sum += y[entry.index] * entry.value_d;
    }
    a[j] = sum;
  }
}

void reduced_costs_parallel(const PackingInstance& instance, std::span<const double> y,
                            std::span<double> a) {
  const int n = instance.cols();
  const double* yp = y.data();
  double* ap = a.data();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (const auto& entry : instance.column(j)) {
      sum += yp[entry.index] * entry.value_d;
    }
    ap[j] = sum;
  }
}

void reduced_costs(const PackingInstance& instance, std::span<const double> y,
                   std::span<double> a) {
  if (instance.nnz() >= kParallelNnzThreshold) {
    reduced_costs_parallel(instance, y, a);
  } else {
    reduced_costs_serial(instance, y, a);
  }
}

double dual_value_serial(std::span<const double> capacities, std::span<const double> y) {
  double total = 0.0;
  for (size_t i = 0; i < y.size(); ++i) total += capacities[i] * y[i];
  return total;
}

double dual_value_parallel(std::span<const double> capacities, std::span<const double> y) {
  double total = 0.0;
  const double* bp = capacities.data();
  const double* yp = y.data();
  const long m = static_cast<long>(y.size());
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (long i = 0; i < m; ++i) total += bp[i] * yp[i];
  return total;
}

double dual_value(std::span<const double> capacities, std::span<const double> y) {
  // The solve loop wants run-to-run determinism; the sum is cheap, so the
  // serial order is used unconditionally.
  return dual_value_serial(capacities, y);
}

}  // namespace conepack::kernels
