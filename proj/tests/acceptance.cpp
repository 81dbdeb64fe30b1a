// Acceptance suite: one pass/fail line per criterion, non-zero exit when
// any criterion fails.  Every tolerance is pinned here, in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "conepack/apps.hpp"
#include "conepack/bound_search.hpp"
#include "conepack/instance_gen.hpp"
#include "conepack/min_mean_cycle.hpp"
#include "conepack/parametric.hpp"
#include "conepack/scheme.hpp"
#include "conepack/spanning_tree.hpp"
#include "conepack/verify.hpp"

namespace {

using namespace conepack;
using Clock = std::chrono::steady_clock;

struct Harness {
  int failures = 0;

  void run(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    auto started = Clock::now();
    try {
      ok = body(detail);
    } catch (const std::exception& err) {
      detail = std::string("exception: ") + err.what();
      ok = false;
    }
    double seconds = std::chrono::duration<double>(Clock::now() - started).count();
    std::printf("[%s] %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

GraphEdge edge(int tail, int head, Rational cap = 1, Rational cost = 0, Rational fee = 0) {
  return {tail, head, std::move(cap), std::move(cost), std::move(fee)};
}

ExplicitGenOptions acceptance_instance_options() {
  ExplicitGenOptions options;
  options.min_rows = 2;
  options.max_rows = 8;
  options.min_cols = 2;
  options.max_cols = 8;
  options.max_generators = 12;
  options.max_value = 20;
  return options;
}

// Criteria 1-3 share one batch of runs over the full weak-bound stack.
struct BatchStats {
  long runs = 0;
  long approx_failures = 0;
  long feasibility_failures = 0;
  long iteration_failures = 0;
  double slowest_seconds = 0.0;
};

BatchStats run_batch() {
  BatchStats stats;
  const std::vector<Rational> eps_grid{make_ratio(1, 2), make_ratio(1, 5), make_ratio(1, 10),
                                       make_ratio(1, 20)};
  Rng rng(20240601);
  for (int index = 0; index < 200; ++index) {
    ExplicitInstance sample = random_explicit_instance(rng, acceptance_instance_options());
    Rational opt = exact_simplex(build_explicit_lp(sample.instance, sample.generators)).value;
    for (const Rational& eps : eps_grid) {
      auto started = Clock::now();
      AppResult result = solve_pack(sample.instance, sample.generators, eps);
      double seconds = std::chrono::duration<double>(Clock::now() - started).count();
      stats.slowest_seconds = std::max(stats.slowest_seconds, seconds);
      ++stats.runs;

      // criterion 1: objective >= (1-eps) * OPT
      Rational threshold = (1 - eps) * opt;
      if (rational_of(result.solution.objective) < threshold - make_ratio(1, 1000000000)) {
        ++stats.approx_failures;
      }
      // criterion 2: exact feasibility, zero tolerance
      if (!check_feasible(sample.instance, result.solution.x).feasible) {
        ++stats.feasibility_failures;
      }
      // criterion 3: analyzed step bounds
      ApproxParams params = ApproxParams::make(eps, sample.instance.rows());
      if (result.log.augment_steps >
          augment_step_bound(params) + sample.instance.rows()) {
        ++stats.iteration_failures;
      }
      if (result.log.bound_raises > bound_raise_bound(params)) {
        ++stats.iteration_failures;
      }
    }
  }
  return stats;
}

}  // namespace

int main() {
  Harness harness;
  BatchStats batch;

  harness.run("criterion 1: approximation guarantee on 200 x 4 seeded runs", [&](std::string& d) {
    batch = run_batch();
    d = std::to_string(batch.runs) + " runs, slowest " +
        std::to_string(batch.slowest_seconds) + "s";
    return batch.approx_failures == 0 && batch.runs >= 800 && batch.slowest_seconds < 1.0;
  });

  harness.run("criterion 2: exact rational feasibility on every run", [&](std::string& d) {
    d = std::to_string(batch.feasibility_failures) + " violations";
    return batch.feasibility_failures == 0;
  });

  harness.run("criterion 3: augment and bound-raise step bounds", [&](std::string& d) {
    d = std::to_string(batch.iteration_failures) + " bound misses";
    return batch.iteration_failures == 0;
  });

  harness.run("criterion 4: parametric lambda* equals brute force, 500 instances",
              [&](std::string& d) {
    Rng rng(777001);
    long mismatches = 0;
    for (int index = 0; index < 500; ++index) {
      ExplicitGenOptions options;
      options.min_rows = 2;
      options.max_rows = 6;
      options.min_cols = 2;
      options.max_cols = 6;
      options.max_generators = 10;
      options.max_value = 20;
      options.integral_b = true;
      options.integral_c = true;
      options.unit_generators = true;
      options.ensure_positive_cost = true;
      ExplicitInstance sample = random_explicit_instance(rng, options);
      std::vector<Rational> a;
      for (int j = 0; j < sample.instance.cols(); ++j) {
        a.push_back(random_positive_rational(rng, 20, false));
      }
      const std::vector<Rational>& c = sample.instance.costs();
      RatioResult truth = brute_force_ratio(sample.generators, a, c);
      Rational cap = truth.lambda_star * 4 + 50;

      auto base = std::make_shared<ExplicitSetOracle>(sample.instance.cols(), sample.generators);
      OraclePtr sign = minimizing_as_sign(base);
      OraclePtr separation = sign_as_separation(sign);
      MostViolated via_sign = most_violated(a, c, *sign, cap);
      MostViolated via_separation = most_violated(a, c, *separation, cap);
      if (via_sign.lambda_star != truth.lambda_star) ++mismatches;
      if (via_separation.lambda_star != truth.lambda_star) ++mismatches;
      if (via_sign.witness.dot(a) != truth.lambda_star * via_sign.witness.dot(c)) ++mismatches;
      if (via_separation.witness.dot(a) != truth.lambda_star * via_separation.witness.dot(c)) {
        ++mismatches;
      }
    }
    d = std::to_string(mismatches) + " mismatches";
    return mismatches == 0;
  });

  harness.run("criterion 5: initial bound bracket and probe budget", [&](std::string& d) {
    Rng rng(777001);  // same instance stream as criterion 4
    long violations = 0;
    for (int index = 0; index < 500; ++index) {
      ExplicitGenOptions options;
      options.min_rows = 2;
      options.max_rows = 6;
      options.min_cols = 2;
      options.max_cols = 6;
      options.max_generators = 10;
      options.max_value = 20;
      options.integral_b = true;
      options.integral_c = true;
      options.unit_generators = true;
      options.ensure_positive_cost = true;
      ExplicitInstance sample = random_explicit_instance(rng, options);
      // keep the stream aligned with criterion 4
      for (int j = 0; j < sample.instance.cols(); ++j) {
        (void)random_positive_rational(rng, 20, false);
      }
      const Rational eps = make_ratio(1, 2);
      ApproxParams params = ApproxParams::make(eps, sample.instance.rows());
      auto base = std::make_shared<ExplicitSetOracle>(sample.instance.cols(), sample.generators);
      OraclePtr separation = sign_as_separation(minimizing_as_sign(base));
      InitialBound bound = find_initial_bound(sample.instance, params, *separation);

      std::vector<Rational> a0 = initial_reduced_costs(sample.instance, params);
      RatioResult truth = brute_force_ratio(sample.generators, a0, sample.instance.costs());
      // lambda <= lambda* <= m^(m/eps) * lambda; with eps = 1/2 the grid
      // ratio m^(2m) is exactly m^(m/eps)
      if (bound.lambda_exact > truth.lambda_star) ++violations;
      if (truth.lambda_star > bound.bracket.grid_ratio * bound.lambda_exact) ++violations;
      double range = std::max<double>(1.0, static_cast<double>(bound.bracket.exponent_range));
      if (bound.probes > static_cast<int>(std::ceil(std::log2(range))) + 3) ++violations;
    }
    d = std::to_string(violations) + " violations";
    return violations == 0;
  });

  harness.run("criterion 6: oracle ground truths against brute force", [&](std::string& d) {
    long mismatches = 0;
    {  // Karp vs enumerated simple cycles, 300 digraphs with n <= 7
      Rng rng(360001);
      for (int round = 0; round < 300; ++round) {
        int n = std::uniform_int_distribution<int>(2, 7)(rng);
        int m = std::uniform_int_distribution<int>(1, 2 * n)(rng);
        Digraph graph = random_digraph(rng, n, m, 9);
        std::vector<Rational> cost;
        for (size_t e = 0; e < graph.edges.size(); ++e) {
          cost.push_back(random_signed_rational(rng, 9, false));
        }
        auto karp = karp_min_mean_cycle<Rational>(graph, cost);
        std::vector<Generator> cycles = enumerate_cycles(graph);
        if (karp.found != !cycles.empty()) {
          ++mismatches;
          continue;
        }
        if (!karp.found) continue;
        Rational best = cycles[0].dot(cost) / Rational(static_cast<long>(cycles[0].entries().size()));
        for (const Generator& cycle : cycles) {
          Rational mean = cycle.dot(cost) / Rational(static_cast<long>(cycle.entries().size()));
          if (mean < best) best = mean;
        }
        if (karp.mean != best) ++mismatches;
      }
    }
    {  // MST vs enumerated spanning trees, 300 graphs with n <= 6
      Rng rng(360002);
      for (int round = 0; round < 300; ++round) {
        int n = std::uniform_int_distribution<int>(2, 6)(rng);
        int extra = std::uniform_int_distribution<int>(0, 2 * n)(rng);
        Digraph graph = random_connected_graph(rng, n, extra, 9);
        std::vector<Rational> cost;
        for (size_t e = 0; e < graph.edges.size(); ++e) {
          cost.push_back(random_signed_rational(rng, 9, false));
        }
        auto greedy = kruskal_mst<Rational>(graph, cost);
        std::vector<Generator> trees = enumerate_trees(graph);
        Rational best = trees[0].dot(cost);
        for (const Generator& tree : trees) best = std::min(best, tree.dot(cost));
        if (greedy.total != best) ++mismatches;
      }
    }
    {  // matroid greedy vs enumerated bases, shipped matroids with m <= 10
      Rng rng(360003);
      for (int round = 0; round < 150; ++round) {
        std::shared_ptr<Matroid> matroid;
        switch (round % 3) {
          case 0: {
            int m = std::uniform_int_distribution<int>(1, 10)(rng);
            matroid = std::make_shared<UniformMatroid>(
                std::uniform_int_distribution<int>(1, m)(rng), m);
            break;
          }
          case 1: {
            int m = std::uniform_int_distribution<int>(2, 10)(rng);
            int blocks = std::uniform_int_distribution<int>(1, 3)(rng);
            std::vector<int> block_of(m);
            for (int& b : block_of) b = std::uniform_int_distribution<int>(0, blocks - 1)(rng);
            std::vector<int> caps(blocks);
            for (int& cap : caps) cap = std::uniform_int_distribution<int>(1, 3)(rng);
            matroid = std::make_shared<PartitionMatroid>(block_of, caps);
            break;
          }
          default: {
            int n = std::uniform_int_distribution<int>(2, 5)(rng);
            matroid = std::make_shared<GraphicMatroid>(
                random_connected_graph(rng, n, std::uniform_int_distribution<int>(0, 4)(rng), 5));
            break;
          }
        }
        if (matroid->rank() == 0) continue;
        std::vector<Rational> cost;
        for (int i = 0; i < matroid->ground_size(); ++i) {
          cost.push_back(random_signed_rational(rng, 9, false));
        }
        std::vector<int> basis = min_weight_basis(*matroid, cost);
        Rational greedy_cost(0);
        for (int e : basis) greedy_cost += cost[e];
        std::vector<Generator> bases = enumerate_bases(*matroid);
        Rational best = bases[0].dot(cost);
        for (const Generator& candidate : bases) best = std::min(best, candidate.dot(cost));
        if (greedy_cost != best) ++mismatches;
      }
    }
    {  // scheme oracle vs enumerated schemes, 100 DAGs with out-degree <= 3
      Rng rng(360004);
      int rounds = 0;
      while (rounds < 100) {
        int n = std::uniform_int_distribution<int>(2, 6)(rng);
        ProcessingNetwork network = random_processing_network(rng, n, 3, 6);
        std::vector<Generator> schemes = enumerate_schemes(network);
        if (schemes.empty()) continue;
        std::vector<Rational> cost;
        for (size_t e = 0; e < network.graph.edges.size(); ++e) {
          cost.push_back(random_signed_rational(rng, 6, false));
        }
        Rational best = schemes[0].dot(cost);
        for (const Generator& scheme : schemes) best = std::min(best, scheme.dot(cost));
        if (min_cost_scheme_flow(network, cost).cost != best) ++mismatches;
        ++rounds;
      }
    }
    d = std::to_string(mismatches) + " mismatches";
    return mismatches == 0;
  });

  harness.run("criterion 7: application cross-checks", [&](std::string& d) {
    const Rational eps = make_ratio(1, 10);
    long failures = 0;

    Digraph k4;
    k4.num_nodes = 4;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) k4.edges.push_back(edge(i, j));
    }
    // OPT = 2 certified by the exact simplex over all 16 trees
    std::vector<Generator> trees = enumerate_trees(k4);
    if (trees.size() != 16) ++failures;
    std::vector<Rational> caps(6, Rational(1)), costs(6, make_ratio(1, 3));
    Rational opt = exact_simplex(build_explicit_lp(build_edge_instance(caps, costs, {}), trees)).value;
    if (opt != Rational(2)) ++failures;
    AppResult packed = solve_treepack(k4, false, eps);
    if (rational_of(packed.solution.objective) < (1 - eps) * opt) ++failures;

    Digraph triangle;
    triangle.num_nodes = 3;
    triangle.edges = {edge(0, 1), edge(1, 2), edge(0, 2)};
    std::vector<Generator> tri_trees = enumerate_trees(triangle);
    std::vector<Rational> tri_caps(3, Rational(1)), tri_costs(3, make_ratio(1, 2));
    Rational tri_opt =
        exact_simplex(build_explicit_lp(build_edge_instance(tri_caps, tri_costs, {}), tri_trees))
            .value;
    if (tri_opt != make_ratio(3, 2)) ++failures;
    AppResult tri_packed = solve_treepack(triangle, false, eps);
    if (rational_of(tri_packed.solution.objective) < (1 - eps) * tri_opt) ++failures;

    // graphic-matroid base packing equals tree packing on the same graphs
    for (const Digraph* graph : {&triangle, &k4}) {
      AppResult via_trees = solve_treepack(*graph, false, eps);
      std::vector<Rational> unit_caps(graph->edges.size(), Rational(1));
      AppResult via_matroid = solve_basepack(std::make_shared<GraphicMatroid>(*graph), unit_caps,
                                             nullptr, eps);
      double rel = std::abs(via_trees.solution.objective - via_matroid.solution.objective) /
                   std::max(1e-30, std::abs(via_trees.solution.objective));
      if (rel > 1e-9) ++failures;
    }

    // single-edge budget max-flow reproduces the analytic optimum 1
    Digraph single;
    single.num_nodes = 2;
    single.source = 0;
    single.sink = 1;
    single.edges = {edge(0, 1, 1, 0, 1)};
    AppResult flow = solve_budget_maxflow(single, Rational(1), eps);
    if (rational_of(flow.solution.objective) < (1 - eps) * 1) ++failures;
    if (flow.solution.objective > 1.0 + 1e-9) ++failures;

    d = std::to_string(failures) + " failures";
    return failures == 0;
  });

  harness.run("criterion 8: adapter contracts over 1000 random cost vectors", [&](std::string& d) {
    Rng rng(888001);
    long violations = 0;
    int trials = 0;
    while (trials < 1000) {
      ExplicitGenOptions options;
      options.max_cols = 6;
      options.max_generators = 8;
      ExplicitInstance sample = random_explicit_instance(rng, options);
      auto base = std::make_shared<ExplicitSetOracle>(sample.instance.cols(), sample.generators);
      OraclePtr sign = minimizing_as_sign(base);
      OraclePtr separation = sign_as_separation(sign);
      for (int round = 0; round < 10 && trials < 1000; ++round, ++trials) {
        std::vector<Rational> dvec;
        for (int j = 0; j < sample.instance.cols(); ++j) {
          dvec.push_back(random_signed_rational(rng, 20, false));
        }
        Rational best = sample.generators[0].dot(dvec);
        for (const Generator& g : sample.generators) best = std::min(best, g.dot(dvec));

        auto minimizing = base->query_exact(dvec);
        if (minimizing.cost != best) ++violations;
        if (minimizing.generator->dot(dvec) != best) ++violations;
        auto s = sign->query_exact(dvec);
        if (sgn(s.cost) != sgn(best)) ++violations;
        if (s.generator->dot(dvec) != s.cost) ++violations;
        auto sep = separation->query_exact(dvec);
        if (sgn(best) < 0) {
          if (!sep.generator || sgn(sep.cost) >= 0 || sep.generator->dot(dvec) != sep.cost) {
            ++violations;
          }
        } else if (sep.generator) {
          ++violations;
        }
      }
    }
    d = std::to_string(violations) + " violations";
    return violations == 0;
  });

  harness.run("criterion 9: performance smoke, n=500 m=5000 eps=0.1 under 60s",
              [&](std::string& d) {
    Rng rng(999001);
    Digraph graph = random_flow_network(rng, 500, 5000, 20);
    auto started = Clock::now();
    AppResult result = solve_budget_maxflow(graph, Rational(50000), make_ratio(1, 10));
    double seconds = std::chrono::duration<double>(Clock::now() - started).count();
    ApproxParams params = ApproxParams::make(make_ratio(1, 10), 5001);
    bool within_bound =
        result.log.augment_steps <= augment_step_bound(params) + params.num_rows;
    d = std::to_string(seconds) + "s, " + std::to_string(result.log.augment_steps) +
        " augment steps";
    return seconds < 60.0 && within_bound && result.solution.feasible;
  });

  if (harness.failures > 0) {
    std::printf("%d criterion(s) failed\n", harness.failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
