#include <doctest.h>

#include "conepack/instance_gen.hpp"
#include "conepack/kernels.hpp"
#include "conepack/shortest_path.hpp"

using namespace conepack;

TEST_CASE("parallel reduced costs match the serial reference bit for bit") {
  Rng rng(91);
  std::uniform_real_distribution<double> weight(0.001, 100.0);
  for (int round = 0; round < 10; ++round) {
    ExplicitGenOptions options;
    options.max_rows = 40;
    options.max_cols = 60;
    ExplicitInstance sample = random_explicit_instance(rng, options);
    std::vector<double> y(sample.instance.rows());
    for (double& v : y) v = weight(rng);
    std::vector<double> serial(sample.instance.cols()), parallel(sample.instance.cols());
    kernels::reduced_costs_serial(sample.instance, y, serial);
    kernels::reduced_costs_parallel(sample.instance, y, parallel);
    CHECK(serial == parallel);  // identical per-column accumulation order
  }
}

TEST_CASE("parallel dual value agrees within rounding") {
  Rng rng(93);
  std::uniform_real_distribution<double> weight(0.001, 100.0);
  std::vector<double> b(5000), y(5000);
  for (size_t i = 0; i < b.size(); ++i) {
    b[i] = weight(rng);
    y[i] = weight(rng);
  }
  double serial = kernels::dual_value_serial(b, y);
  double parallel = kernels::dual_value_parallel(b, y);
  CHECK(parallel == doctest::Approx(serial).epsilon(1e-12));
}

TEST_CASE("parallel sssp batch equals the serial batch") {
  Rng rng(97);
  Digraph graph = random_flow_network(rng, 60, 400, 9);
  Adjacency adjacency(graph);
  std::vector<double> cost(graph.edges.size());
  std::uniform_real_distribution<double> weight(0.01, 10.0);
  for (double& v : cost) v = weight(rng);
  std::vector<int> sources{0, 5, 10, 15, 20, 25};
  auto serial = sssp_batch_serial(graph, adjacency, cost, sources);
  auto parallel = sssp_batch_parallel(graph, adjacency, cost, sources);
  REQUIRE(serial.size() == parallel.size());
  for (size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].reached == parallel[i].reached);
    CHECK(serial[i].dist == parallel[i].dist);
    CHECK(serial[i].parent_edge == parallel[i].parent_edge);
  }
}
