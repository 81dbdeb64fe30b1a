#include "conepack/apps.hpp"

#include <algorithm>
#include <map>

#include "conepack/bound_search.hpp"
#include "conepack/min_mean_cycle.hpp"
#include "conepack/parametric.hpp"
#include "conepack/scheme.hpp"
#include "conepack/shortest_path.hpp"
#include "conepack/spanning_tree.hpp"

namespace conepack {

namespace {

Generator unit_incidence(const std::vector<int>& edges) {
  std::vector<std::pair<int, Rational>> entries;
  entries.reserve(edges.size());
  for (int e : edges) entries.emplace_back(e, Rational(1));
  return Generator(std::move(entries));
}

std::vector<Rational> lift(std::span<const double> d) {
  std::vector<Rational> exact;
  exact.reserve(d.size());
  for (double v : d) exact.push_back(rational_of(v));
  return exact;
}

void require_non_negative(std::span<const double> d) {
  for (double v : d) {
    if (v < 0.0) fail(Errc::InvalidArgument, "path oracles need non-negative costs");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// StPathOracle

StPathOracle::StPathOracle(Digraph graph) : graph_(std::move(graph)), adjacency_(graph_) {
  graph_.validate();
  if (!graph_.source || !graph_.sink) fail(Errc::InvalidArgument, "path oracle needs s and t");
}

OracleReply<double> StPathOracle::query(std::span<const double> d) const {
  require_non_negative(d);
  std::vector<double> cost(d.begin(), d.end());
  SsspTree<double> tree = dijkstra(graph_, adjacency_, cost, *graph_.source);
  Generator g = unit_incidence(tree_path(graph_, tree, *graph_.sink));
  double value = g.dot(d);
  return {std::move(g), value};
}

OracleReply<Rational> StPathOracle::query_exact(const std::vector<Rational>& d) const {
  for (const Rational& v : d) {
    if (sgn(v) < 0) fail(Errc::InvalidArgument, "path oracles need non-negative costs");
  }
  SsspTree<Rational> tree = dijkstra(graph_, adjacency_, d, *graph_.source);
  Generator g = unit_incidence(tree_path(graph_, tree, *graph_.sink));
  Rational value = g.dot(d);
  return {std::move(g), std::move(value)};
}

// ---------------------------------------------------------------------------
// CycleSignOracle

CycleSignOracle::CycleSignOracle(Digraph graph) : graph_(std::move(graph)) { graph_.validate(); }

OracleReply<double> CycleSignOracle::query(std::span<const double> d) const {
  OracleReply<Rational> exact = query_exact(lift(d));
  if (!exact.generator) return {std::nullopt, 1.0};
  return {std::move(exact.generator), to_double(exact.cost)};
}

OracleReply<Rational> CycleSignOracle::query_exact(const std::vector<Rational>& d) const {
  MeanCycle<Rational> cycle = karp_min_mean_cycle(graph_, d);
  if (!cycle.found) return {std::nullopt, Rational(1)};  // acyclic: positive sign
  return {unit_incidence(cycle.edges), std::move(cycle.total)};
}

std::optional<Generator> CycleSignOracle::query_parametric(const std::vector<Affine>& d) const {
  MeanCycle<Affine> cycle = karp_min_mean_cycle(graph_, d);
  if (!cycle.found) return std::nullopt;
  return unit_incidence(cycle.edges);
}

// ---------------------------------------------------------------------------
// SchemeOracle

SchemeOracle::SchemeOracle(ProcessingNetwork network) : network_(std::move(network)) {
  network_.validate();
}

OracleReply<double> SchemeOracle::query(std::span<const double> d) const {
  std::vector<double> cost(d.begin(), d.end());
  SchemeResult<double> best = min_cost_scheme_flow(network_, cost);
  return {std::move(best.flow), best.cost};
}

OracleReply<Rational> SchemeOracle::query_exact(const std::vector<Rational>& d) const {
  SchemeResult<Rational> best = min_cost_scheme_flow(network_, d);
  return {std::move(best.flow), std::move(best.cost)};
}

std::optional<Generator> SchemeOracle::query_parametric(const std::vector<Affine>& d) const {
  return min_cost_scheme_flow(network_, d).flow;
}

// ---------------------------------------------------------------------------
// TreeOracle

TreeOracle::TreeOracle(Digraph graph) : graph_(std::move(graph)) { graph_.validate(); }

OracleReply<double> TreeOracle::query(std::span<const double> d) const {
  std::vector<double> cost(d.begin(), d.end());
  MstResult<double> tree = kruskal_mst(graph_, cost);
  return {unit_incidence(tree.edges), tree.total};
}

OracleReply<Rational> TreeOracle::query_exact(const std::vector<Rational>& d) const {
  MstResult<Rational> tree = kruskal_mst(graph_, d);
  return {unit_incidence(tree.edges), std::move(tree.total)};
}

std::optional<Generator> TreeOracle::query_parametric(const std::vector<Affine>& d) const {
  return unit_incidence(kruskal_mst(graph_, d).edges);
}

// ---------------------------------------------------------------------------
// BasisOracle

BasisOracle::BasisOracle(std::shared_ptr<const Matroid> matroid) : matroid_(std::move(matroid)) {
  if (!matroid_ || matroid_->ground_size() <= 0) {
    fail(Errc::InvalidArgument, "matroid oracle needs a non-empty ground set");
  }
  if (matroid_->rank() <= 0) fail(Errc::InvalidArgument, "matroid rank must be positive");
}

OracleReply<double> BasisOracle::query(std::span<const double> d) const {
  std::vector<double> cost(d.begin(), d.end());
  Generator g = unit_incidence(min_weight_basis(*matroid_, cost));
  double value = g.dot(d);
  return {std::move(g), value};
}

OracleReply<Rational> BasisOracle::query_exact(const std::vector<Rational>& d) const {
  Generator g = unit_incidence(min_weight_basis(*matroid_, d));
  Rational value = g.dot(d);
  return {std::move(g), std::move(value)};
}

std::optional<Generator> BasisOracle::query_parametric(const std::vector<Affine>& d) const {
  return unit_incidence(min_weight_basis(*matroid_, d));
}

// ---------------------------------------------------------------------------
// ConcurrentOracle

namespace {

void group_sources(const std::vector<Commodity>& commodities, std::vector<int>& sources,
                   std::vector<int>& source_index) {
  std::map<int, int> seen;
  source_index.resize(commodities.size());
  for (size_t j = 0; j < commodities.size(); ++j) {
    auto [it, inserted] = seen.emplace(commodities[j].source, static_cast<int>(sources.size()));
    if (inserted) sources.push_back(commodities[j].source);
    source_index[j] = it->second;
  }
}

}  // namespace

ConcurrentOracle::ConcurrentOracle(Digraph graph, std::vector<Commodity> commodities)
    : graph_(std::move(graph)), adjacency_(graph_), commodities_(std::move(commodities)) {
  graph_.validate();
  if (commodities_.empty()) fail(Errc::InvalidArgument, "need at least one commodity");
  for (const Commodity& c : commodities_) {
    if (c.source == c.sink) fail(Errc::InvalidArgument, "commodity source equals sink");
    if (sgn(c.demand) <= 0) fail(Errc::InvalidArgument, "demands must be positive");
  }
  group_sources(commodities_, sources_, source_index_);
}

template <class Tree>
Generator ConcurrentOracle::assemble(const std::vector<Tree>& trees) const {
  std::map<int, Rational> amounts;
  for (size_t j = 0; j < commodities_.size(); ++j) {
    const Tree& tree = trees[source_index_[j]];
    for (int e : tree_path(graph_, tree, commodities_[j].sink)) {
      amounts[e] += commodities_[j].demand;
    }
  }
  std::vector<std::pair<int, Rational>> entries(amounts.begin(), amounts.end());
  return Generator(std::move(entries));
}

OracleReply<double> ConcurrentOracle::query(std::span<const double> d) const {
  require_non_negative(d);
  std::vector<double> cost(d.begin(), d.end());
  auto trees = sssp_batch(graph_, adjacency_, cost, sources_);
  Generator g = assemble(trees);
  double value = g.dot(d);
  return {std::move(g), value};
}

OracleReply<Rational> ConcurrentOracle::query_exact(const std::vector<Rational>& d) const {
  std::vector<SsspTree<Rational>> trees(sources_.size());
  for (size_t i = 0; i < sources_.size(); ++i) {
    trees[i] = dijkstra(graph_, adjacency_, d, sources_[i]);
  }
  Generator g = assemble(trees);
  Rational value = g.dot(d);
  return {std::move(g), std::move(value)};
}

// ---------------------------------------------------------------------------
// WeightedMcfOracle

WeightedMcfOracle::WeightedMcfOracle(Digraph graph, std::vector<Commodity> commodities)
    : graph_(std::move(graph)), adjacency_(graph_), commodities_(std::move(commodities)) {
  graph_.validate();
  if (commodities_.empty()) fail(Errc::InvalidArgument, "need at least one commodity");
  for (const Commodity& c : commodities_) {
    if (c.source == c.sink) fail(Errc::InvalidArgument, "commodity source equals sink");
    if (sgn(c.weight) <= 0) fail(Errc::InvalidArgument, "weights must be positive");
  }
  group_sources(commodities_, sources_, source_index_);
}

OracleReply<double> WeightedMcfOracle::query(std::span<const double> d) const {
  require_non_negative(d);
  std::vector<double> cost(d.begin(), d.end());
  auto trees = sssp_batch(graph_, adjacency_, cost, sources_);
  // Scaled distance dist(s_j, t_j) / c_j; smallest commodity index wins ties.
  int best = -1;
  double best_scaled = 0.0;
  for (size_t j = 0; j < commodities_.size(); ++j) {
    const auto& tree = trees[source_index_[j]];
    if (!tree.reached[commodities_[j].sink]) {
      fail(Errc::NoPath, "commodity " + std::to_string(j) + " has no route");
    }
    double scaled = tree.dist[commodities_[j].sink] / to_double(commodities_[j].weight);
    if (best < 0 || scaled < best_scaled) {
      best = static_cast<int>(j);
      best_scaled = scaled;
    }
  }
  const Commodity& commodity = commodities_[best];
  Rational amount = 1 / commodity.weight;
  std::vector<std::pair<int, Rational>> entries;
  for (int e : tree_path(graph_, trees[source_index_[best]], commodity.sink)) {
    entries.emplace_back(e, amount);
  }
  Generator g{std::move(entries)};
  double value = g.dot(d);
  return {std::move(g), value};
}

OracleReply<Rational> WeightedMcfOracle::query_exact(const std::vector<Rational>& d) const {
  std::vector<SsspTree<Rational>> trees(sources_.size());
  for (size_t i = 0; i < sources_.size(); ++i) {
    trees[i] = dijkstra(graph_, adjacency_, d, sources_[i]);
  }
  int best = -1;
  Rational best_scaled;
  for (size_t j = 0; j < commodities_.size(); ++j) {
    const auto& tree = trees[source_index_[j]];
    if (!tree.reached[commodities_[j].sink]) {
      fail(Errc::NoPath, "commodity " + std::to_string(j) + " has no route");
    }
    Rational scaled = tree.dist[commodities_[j].sink] / commodities_[j].weight;
    if (best < 0 || scaled < best_scaled) {
      best = static_cast<int>(j);
      best_scaled = std::move(scaled);
    }
  }
  const Commodity& commodity = commodities_[best];
  Rational amount = 1 / commodity.weight;
  std::vector<std::pair<int, Rational>> entries;
  for (int e : tree_path(graph_, trees[source_index_[best]], commodity.sink)) {
    entries.emplace_back(e, amount);
  }
  Generator g{std::move(entries)};
  Rational value = g.dot(d);
  return {std::move(g), std::move(value)};
}

// ---------------------------------------------------------------------------
// Instance assembly and front-ends

PackingInstance build_edge_instance(const std::vector<Rational>& capacities,
                                    const std::vector<Rational>& costs,
                                    const std::vector<BudgetRow>& budget_rows) {
  const int n = static_cast<int>(capacities.size());
  std::vector<Triple> triples;
  std::vector<Rational> b = capacities;
  for (int j = 0; j < n; ++j) triples.push_back({j, j, Rational(1)});
  int row = n;
  for (const BudgetRow& extra : budget_rows) {
    if (static_cast<int>(extra.coefficients.size()) != n) {
      fail(Errc::InvalidArgument, "budget row length does not match column count");
    }
    bool any = false;
    for (int j = 0; j < n; ++j) {
      if (sgn(extra.coefficients[j]) < 0) {
        fail(Errc::InvalidArgument, "budget coefficients must be non-negative");
      }
      if (sgn(extra.coefficients[j]) > 0) {
        triples.push_back({row, j, extra.coefficients[j]});
        any = true;
      }
    }
    if (!any) fail(Errc::EmptyRowOrColumn, "budget row has no positive coefficient");
    b.push_back(extra.limit);
    ++row;
  }
  return new_instance(row, n, std::move(triples), std::move(b), costs);
}

namespace {

std::vector<Rational> edge_capacities(const Digraph& graph) {
  std::vector<Rational> u;
  u.reserve(graph.edges.size());
  for (const GraphEdge& e : graph.edges) u.push_back(e.capacity);
  return u;
}

std::vector<BudgetRow> with_fee_row(const Digraph& graph, const Rational& budget,
                                    std::vector<BudgetRow> extra, std::string* note) {
  std::vector<Rational> fees;
  bool any = false;
  for (const GraphEdge& e : graph.edges) {
    fees.push_back(e.fee);
    if (sgn(e.fee) > 0) any = true;
  }
  if (any) {
    if (sgn(budget) <= 0) fail(Errc::InvalidArgument, "budget must be positive");
    extra.insert(extra.begin(), BudgetRow{std::move(fees), budget});
  } else if (note) {
    *note = "all fees are zero; budget row omitted";
  }
  return extra;
}

double total_packed(const SolveLog& log) {
  double total = 0.0;
  for (const SolveStep& step : log.steps) {
    if (step.kind == SolveStep::Kind::Augment) total += step.nu;
  }
  return total;
}

// Shared general-path driver: weak (binary search) or parametric (exact
// lambda*) initialization, then the two-case loop.
AppResult run_general_app(const PackingInstance& instance, const Rational& eps, BoundMode mode,
                          const OraclePtr& loop_oracle, const OraclePtr& probe_oracle,
                          const EngineConfig* base_config) {
  EngineConfig config;
  if (base_config) config = *base_config;
  config.params = ApproxParams::make(eps, instance.rows());

  AppResult result;
  bool any_positive_cost = false;
  for (const Rational& c : instance.costs()) {
    if (sgn(c) > 0) any_positive_cost = true;
  }
  if (!any_positive_cost) {
    RunResult run = run_general(instance, config, *loop_oracle, Rational(1));
    result.solution = std::move(run.solution);
    result.log = std::move(run.log);
    result.note = std::move(run.note);
    return result;
  }

  Rational initial;
  if (mode == BoundMode::Weak) {
    InitialBound bound = find_initial_bound(instance, config.params, *loop_oracle);
    initial = bound.lambda_exact;
    result.bound_probes = bound.probes;
  } else {
    BoundBracket bracket = make_bracket(instance, config.params);
    std::vector<Rational> a0 = initial_reduced_costs(instance, config.params);
    try {
      MostViolated exact = most_violated(a0, instance.costs(), *probe_oracle, bracket.lambda_hi);
      initial = exact.lambda_star;
      result.bound_probes = exact.probe_calls;
    } catch (const SolverError& err) {
      if (err.code() != Errc::NoPositiveCostGenerator) throw;
      // No generator with positive cost: the zero solution is optimal.
      result.solution = scale_to_feasible(instance, std::vector<double>(instance.cols(), 0.0),
                                          config.params);
      result.note = "no positive-cost generator; zero solution is optimal";
      return result;
    }
  }
  result.lambda_initial = to_double(initial);

  RunResult run = run_general(instance, config, *loop_oracle, initial);
  result.solution = std::move(run.solution);
  result.log = std::move(run.log);
  if (!run.note.empty()) result.note = std::move(run.note);
  result.solution.oracle_calls += result.bound_probes;
  return result;
}

}  // namespace

AppResult solve_budget_maxflow(const Digraph& graph, const Rational& budget, const Rational& eps,
                               const std::vector<BudgetRow>& extra_rows) {
  graph.validate();
  if (!graph.sink) fail(Errc::InvalidArgument, "max-flow needs a designated sink");
  AppResult result;
  std::vector<BudgetRow> rows = with_fee_row(graph, budget, extra_rows, &result.note);
  std::vector<Rational> costs(graph.edges.size(), Rational(0));
  for (size_t e = 0; e < graph.edges.size(); ++e) {
    if (graph.edges[e].head == *graph.sink) costs[e] = 1;
  }
  PackingInstance instance = build_edge_instance(edge_capacities(graph), costs, rows);
  EngineConfig config;
  config.params = ApproxParams::make(eps, instance.rows());
  config.record_generators = instance.cols() <= 4096;
  StPathOracle oracle(graph);
  RunResult run = run_uniform(instance, config, oracle, Rational(1));
  result.solution = std::move(run.solution);
  result.log = std::move(run.log);
  return result;
}

AppResult solve_budget_mincost(const Digraph& graph, const Rational& budget, const Rational& eps,
                               BoundMode mode, const std::vector<BudgetRow>& extra_rows) {
  graph.validate();
  AppResult pre;
  std::vector<BudgetRow> rows = with_fee_row(graph, budget, extra_rows, &pre.note);
  std::vector<Rational> costs;
  costs.reserve(graph.edges.size());
  for (const GraphEdge& e : graph.edges) costs.push_back(e.cost);
  PackingInstance instance = build_edge_instance(edge_capacities(graph), costs, rows);
  auto sign_oracle = std::make_shared<CycleSignOracle>(graph);
  OraclePtr loop_oracle = sign_as_separation(sign_oracle);
  AppResult result = run_general_app(instance, eps, mode, loop_oracle, sign_oracle, nullptr);
  if (!pre.note.empty() && result.note.empty()) result.note = pre.note;
  return result;
}

AppResult solve_gpn(const ProcessingNetwork& network, const Rational& eps, GpnObjective objective,
                    BoundMode mode) {
  network.validate();
  const Digraph& graph = network.graph;
  auto oracle = std::make_shared<SchemeOracle>(network);
  if (objective == GpnObjective::MaxFlow) {
    std::vector<Rational> costs(graph.edges.size(), Rational(0));
    for (size_t e = 0; e < graph.edges.size(); ++e) {
      if (graph.edges[e].head == *graph.sink) costs[e] = 1;
    }
    PackingInstance instance = build_edge_instance(edge_capacities(graph), costs, {});
    EngineConfig config;
    config.params = ApproxParams::make(eps, instance.rows());
    AppResult result;
    RunResult run = run_uniform(instance, config, *oracle, Rational(1));
    result.solution = std::move(run.solution);
    result.log = std::move(run.log);
    return result;
  }
  std::vector<Rational> costs;
  costs.reserve(graph.edges.size());
  for (const GraphEdge& e : graph.edges) costs.push_back(e.cost);
  PackingInstance instance = build_edge_instance(edge_capacities(graph), costs, {});
  OraclePtr loop_oracle = sign_as_separation(minimizing_as_sign(oracle));
  return run_general_app(instance, eps, mode, loop_oracle, oracle, nullptr);
}

AppResult solve_concurrent(const Digraph& graph, const std::vector<Commodity>& commodities,
                           const Rational& eps, const std::vector<BudgetRow>& extra_rows) {
  graph.validate();
  // The objective counts packed basic components (the satisfied demand
  // fraction lambda); there is no edge-linear cost, so the instance carries
  // zero costs and the certificate spot-check is disabled.
  std::vector<Rational> costs(graph.edges.size(), Rational(0));
  PackingInstance instance = build_edge_instance(edge_capacities(graph), costs, extra_rows);
  EngineConfig config;
  config.params = ApproxParams::make(eps, instance.rows());
  config.check_certificate_cost = false;
  ConcurrentOracle oracle(graph, commodities);
  AppResult result;
  RunResult run = run_uniform(instance, config, oracle, Rational(1));
  result.solution = std::move(run.solution);
  result.log = std::move(run.log);
  result.solution.objective = total_packed(result.log) / result.log.final_scale;
  return result;
}

AppResult solve_weighted_mcf(const Digraph& graph, const std::vector<Commodity>& commodities,
                             const Rational& eps) {
  graph.validate();
  // Same component-level objective: every generator carries weighted value 1.
  std::vector<Rational> costs(graph.edges.size(), Rational(0));
  PackingInstance instance = build_edge_instance(edge_capacities(graph), costs, {});
  EngineConfig config;
  config.params = ApproxParams::make(eps, instance.rows());
  config.check_certificate_cost = false;
  WeightedMcfOracle oracle(graph, commodities);
  AppResult result;
  RunResult run = run_uniform(instance, config, oracle, Rational(1));
  result.solution = std::move(run.solution);
  result.log = std::move(run.log);
  result.solution.objective = total_packed(result.log) / result.log.final_scale;
  return result;
}

AppResult solve_treepack(const Digraph& graph, bool weighted, const Rational& eps,
                         BoundMode mode) {
  graph.validate();
  if (graph.num_nodes < 2) fail(Errc::InvalidArgument, "tree packing needs at least two nodes");
  const Rational tree_edges(graph.num_nodes - 1);
  std::vector<Rational> costs;
  costs.reserve(graph.edges.size());
  for (const GraphEdge& e : graph.edges) {
    costs.push_back((weighted ? e.cost : Rational(1)) / tree_edges);
  }
  PackingInstance instance = build_edge_instance(edge_capacities(graph), costs, {});
  auto oracle = std::make_shared<TreeOracle>(graph);
  if (!weighted) {
    EngineConfig config;
    config.params = ApproxParams::make(eps, instance.rows());
    AppResult result;
    RunResult run = run_uniform(instance, config, *oracle, Rational(1));
    result.solution = std::move(run.solution);
    result.log = std::move(run.log);
    return result;
  }
  OraclePtr loop_oracle = sign_as_separation(minimizing_as_sign(oracle));
  return run_general_app(instance, eps, mode, loop_oracle, oracle, nullptr);
}

AppResult solve_basepack(std::shared_ptr<const Matroid> matroid,
                         const std::vector<Rational>& capacities,
                         const std::vector<Rational>* weights, const Rational& eps,
                         BoundMode mode) {
  auto oracle = std::make_shared<BasisOracle>(matroid);
  if (static_cast<int>(capacities.size()) != matroid->ground_size()) {
    fail(Errc::InvalidArgument, "capacity vector does not match the ground set");
  }
  const Rational rank(matroid->rank());
  std::vector<Rational> costs(matroid->ground_size(), Rational(0));
  for (int i = 0; i < matroid->ground_size(); ++i) {
    costs[i] = (weights ? (*weights)[i] : Rational(1)) / rank;
  }
  PackingInstance instance = build_edge_instance(capacities, costs, {});
  if (!weights) {
    EngineConfig config;
    config.params = ApproxParams::make(eps, instance.rows());
    AppResult result;
    RunResult run = run_uniform(instance, config, *oracle, Rational(1));
    result.solution = std::move(run.solution);
    result.log = std::move(run.log);
    return result;
  }
  OraclePtr loop_oracle = sign_as_separation(minimizing_as_sign(oracle));
  return run_general_app(instance, eps, mode, loop_oracle, oracle, nullptr);
}

AppResult solve_pack(const PackingInstance& instance, std::vector<Generator> generators,
                     const Rational& eps, BoundMode mode, const EngineConfig* base_config) {
  auto explicit_oracle = std::make_shared<ExplicitSetOracle>(instance.cols(), std::move(generators));
  OraclePtr loop_oracle = sign_as_separation(minimizing_as_sign(explicit_oracle));
  return run_general_app(instance, eps, mode, loop_oracle, explicit_oracle, base_config);
}

}  // namespace conepack
