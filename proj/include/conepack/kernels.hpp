#pragma once

#include <span>
#include <vector>

namespace conepack {

class PackingInstance;

namespace kernels {

// Serial reference implementations are kept alongside the OpenMP variants;
// both iterate columns in identical order, so results match bit for bit.
void reduced_costs_serial(const PackingInstance& instance, std::span<const double> y,
                          std::span<double> a);
void reduced_costs_parallel(const PackingInstance& instance, std::span<const double> y,
                            std::span<double> a);
// Dispatches on nnz.
void reduced_costs(const PackingInstance& instance, std::span<const double> y,
                   std::span<double> a);

double dual_value_serial(std::span<const double> capacities, std::span<const double> y);
double dual_value_parallel(std::span<const double> capacities, std::span<const double> y);
double dual_value(std::span<const double> capacities, std::span<const double> y);

// Threshold above which the parallel variants are used.
inline constexpr long kParallelNnzThreshold = 1 << 15;

}  // namespace kernels
}  // namespace conepack
