// Microbenchmarks comparing the serial reference kernels against their
// OpenMP variants, plus one end-to-end solve for scale.

#include <benchmark/benchmark.h>

#include "conepack/apps.hpp"
#include "conepack/instance_gen.hpp"
#include "conepack/kernels.hpp"
#include "conepack/shortest_path.hpp"

namespace {

using namespace conepack;

ExplicitInstance make_instance(int rows, int cols) {
  Rng rng(12345);
  ExplicitGenOptions options;
  options.min_rows = rows;
  options.max_rows = rows;
  options.min_cols = cols;
  options.max_cols = cols;
  return random_explicit_instance(rng, options);
}

void bm_reduced_costs_serial(benchmark::State& state) {
  ExplicitInstance sample = make_instance(static_cast<int>(state.range(0)),
                                          static_cast<int>(state.range(0)));
  std::vector<double> y(sample.instance.rows(), 0.5);
  std::vector<double> a(sample.instance.cols());
  for (auto _ : state) {
    kernels::reduced_costs_serial(sample.instance, y, a);
    benchmark::DoNotOptimize(a.data());
    benchmark::ClobberMemory();
  }
}

void bm_reduced_costs_parallel(benchmark::State& state) {
  ExplicitInstance sample = make_instance(static_cast<int>(state.range(0)),
                                          static_cast<int>(state.range(0)));
  std::vector<double> y(sample.instance.rows(), 0.5);
  std::vector<double> a(sample.instance.cols());
  for (auto _ : state) {
    kernels::reduced_costs_parallel(sample.instance, y, a);
    benchmark::DoNotOptimize(a.data());
    benchmark::ClobberMemory();
  }
}

void bm_sssp_batch_serial(benchmark::State& state) {
  Rng rng(999);
  Digraph graph = random_flow_network(rng, 200, 2000, 9);
  Adjacency adjacency(graph);
  std::vector<double> cost(graph.edges.size(), 1.0);
  std::vector<int> sources;
  for (int s = 0; s < static_cast<int>(state.range(0)); ++s) sources.push_back(s);
  for (auto _ : state) {
    auto trees = sssp_batch_serial(graph, adjacency, cost, sources);
    benchmark::DoNotOptimize(trees.data());
  }
}

void bm_sssp_batch_parallel(benchmark::State& state) {
  Rng rng(999);
  Digraph graph = random_flow_network(rng, 200, 2000, 9);
  Adjacency adjacency(graph);
  std::vector<double> cost(graph.edges.size(), 1.0);
  std::vector<int> sources;
  for (int s = 0; s < static_cast<int>(state.range(0)); ++s) sources.push_back(s);
  for (auto _ : state) {
    auto trees = sssp_batch_parallel(graph, adjacency, cost, sources);
    benchmark::DoNotOptimize(trees.data());
  }
}

void bm_budget_maxflow(benchmark::State& state) {
  Rng rng(777);
  Digraph graph = random_flow_network(rng, static_cast<int>(state.range(0)),
                                      static_cast<int>(state.range(0)) * 10, 9);
  for (auto _ : state) {
    AppResult result = solve_budget_maxflow(graph, Rational(1000), make_ratio(1, 5));
    benchmark::DoNotOptimize(result.solution.objective);
  }
}

}  // namespace

BENCHMARK(bm_reduced_costs_serial)->Arg(64)->Arg(512)->Arg(2048);
BENCHMARK(bm_reduced_costs_parallel)->Arg(64)->Arg(512)->Arg(2048);
BENCHMARK(bm_sssp_batch_serial)->Arg(4)->Arg(16);
BENCHMARK(bm_sssp_batch_parallel)->Arg(4)->Arg(16);
BENCHMARK(bm_budget_maxflow)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
