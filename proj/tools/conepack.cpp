// Command-line front end: parse an instance file, pick the problem and
// oracle, run the solver, and emit a report (JSON or CSV).

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "conepack/apps.hpp"
#include "conepack/dimacs.hpp"
#include "conepack/instance_gen.hpp"
#include "conepack/json_io.hpp"
#include "conepack/verify.hpp"

namespace {

using namespace conepack;

constexpr int kExitSolver = 2;
constexpr int kExitUsage = 64;
constexpr int kExitFile = 66;

struct CommonOptions {
  std::string input;
  std::string eps_text = "0.1";
  std::string bound = "weak";
  std::string output = "json";
  std::string trace_path;
  std::string budget_text;
  unsigned long long seed = 1;
};

void add_common(CLI::App* cmd, CommonOptions& options, bool needs_input = true) {
  auto* input = cmd->add_option("--input", options.input, "instance file");
  if (needs_input) input->required();
  cmd->add_option("--eps", options.eps_text, "approximation parameter in (0,1)");
  cmd->add_option("--bound", options.bound, "initial lower bound strategy")
      ->check(CLI::IsMember({"weak", "parametric"}));
  cmd->add_option("--output", options.output, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--trace", options.trace_path, "write the solve log as JSON");
  cmd->add_option("--budget", options.budget_text, "budget override (rational)");
  cmd->add_option("--seed", options.seed, "seed for bench instance generation");
}

Rational parse_eps(const std::string& text) {
  Rational eps = parse_rational(text);
  if (sgn(eps) <= 0 || eps >= 1) {
    throw CLI::ValidationError("--eps must lie in (0,1)");
  }
  return eps;
}

BoundMode parse_bound(const std::string& text) {
  return text == "parametric" ? BoundMode::Parametric : BoundMode::Weak;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::system_error(ENOENT, std::generic_category(), "cannot open '" + path + "'");
  }
  Json doc;
  in >> doc;
  return doc;
}

DimacsProblem read_problem(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw std::system_error(ENOENT, std::generic_category(), "cannot open '" + path + "'");
  }
  return read_dimacs_file(path);
}

Rational resolve_budget(const CommonOptions& options, const DimacsProblem& problem) {
  if (!options.budget_text.empty()) return parse_rational(options.budget_text);
  if (problem.budget) return *problem.budget;
  fail(Errc::InvalidArgument, "no budget given ('b' line or --budget)");
}

void emit(const RunReport& report, const AppResult& result, const CommonOptions& options) {
  if (!options.trace_path.empty()) {
    std::ofstream out(options.trace_path);
    if (!out) {
      throw std::system_error(ENOENT, std::generic_category(),
                              "cannot write '" + options.trace_path + "'");
    }
    out << solve_log_to_json(result.log).dump(2) << '\n';
  }
  if (options.output == "csv") {
    std::cout << report_to_csv(report);
  } else {
    std::cout << report_to_json(report).dump(2) << '\n';
  }
}

RunReport make_report(const std::string& problem, const Rational& eps,
                      const CommonOptions& options, const AppResult& result,
                      const PackingInstance& instance, double wall_ms) {
  RunReport report;
  report.problem = problem;
  report.eps = eps;
  report.bound_mode = options.bound;
  report.solution = result.solution;
  report.worst_violation = check_feasible(instance, result.solution.x).worst_violation;
  report.lambda_initial = result.lambda_initial;
  report.lambda_final = result.log.lambda_lower_final;
  report.bound_raises = result.log.bound_raises;
  report.note = result.note;
  report.wall_ms = wall_ms;
  return report;
}

// Rebuilds the packing instance a front end solved so the report can carry
// an exact feasibility verdict.
PackingInstance rebuild_instance(const Digraph& graph, const std::vector<Rational>& costs,
                                 const std::optional<Rational>& budget) {
  std::vector<Rational> caps;
  for (const GraphEdge& e : graph.edges) caps.push_back(e.capacity);
  std::vector<BudgetRow> rows;
  if (budget) {
    std::vector<Rational> fees;
    bool any = false;
    for (const GraphEdge& e : graph.edges) {
      fees.push_back(e.fee);
      any = any || sgn(e.fee) > 0;
    }
    if (any) rows.push_back({std::move(fees), *budget});
  }
  return build_edge_instance(caps, costs, rows);
}

std::shared_ptr<Matroid> matroid_from_json(const Json& doc) {
  std::string kind = doc.at("kind").get<std::string>();
  if (kind == "uniform") {
    return std::make_shared<UniformMatroid>(doc.at("rank").get<int>(), doc.at("size").get<int>());
  }
  if (kind == "free") {
    return std::make_shared<FreeMatroid>(doc.at("size").get<int>());
  }
  if (kind == "partition") {
    return std::make_shared<PartitionMatroid>(doc.at("blocks").get<std::vector<int>>(),
                                              doc.at("caps").get<std::vector<int>>());
  }
  if (kind == "graphic") {
    Digraph graph;
    graph.num_nodes = doc.at("nodes").get<int>();
    for (const Json& pair : doc.at("edges")) {
      graph.edges.push_back({pair[0].get<int>(), pair[1].get<int>(), Rational(1), Rational(0),
                             Rational(0)});
    }
    return std::make_shared<GraphicMatroid>(std::move(graph));
  }
  fail(Errc::ParseError, "unknown matroid kind '" + kind + "'");
}

int run_verify(const CommonOptions& options, const std::string& solution_path) {
  Json instance_doc = read_json_file(options.input);
  PackingInstance instance = instance_from_json(instance_doc);
  Json solution_doc = read_json_file(solution_path);
  std::vector<double> x = solution_x_from_json(solution_doc);
  Feasibility feasibility = check_feasible(instance, x);

  Json out;
  out["feasible"] = feasibility.feasible;
  out["worst_violation"] = to_string(feasibility.worst_violation);
  double objective = 0.0;
  for (size_t j = 0; j < x.size(); ++j) objective += to_double(instance.costs()[j]) * x[j];
  out["objective"] = objective;
  if (instance_doc.contains("generators")) {
    std::vector<Generator> generators = generators_from_json(instance_doc, instance.cols());
    SimplexResult opt = exact_simplex(build_explicit_lp(instance, generators));
    out["opt"] = to_string(opt.value);
    out["ratio"] = sgn(opt.value) > 0 ? objective / to_double(opt.value) : 1.0;
  }
  std::cout << out.dump(2) << '\n';
  return feasibility.feasible ? 0 : kExitSolver;
}

struct BenchRun {
  std::string problem;
  unsigned long long seed;
  Rational eps;
};

int run_bench(const CommonOptions& options, const std::string& out_path) {
  const std::vector<Rational> eps_grid{make_ratio(1, 2), make_ratio(1, 5), make_ratio(1, 10),
                                       make_ratio(1, 20)};
  const std::vector<std::string> problems{"pack", "mincost-budget", "treepack", "basepack", "gpn"};
  std::vector<BenchRun> runs;
  for (const std::string& problem : problems) {
    for (const Rational& eps : eps_grid) {
      for (int rep = 0; rep < 3; ++rep) {
        runs.push_back({problem, options.seed + rep, eps});
      }
    }
  }
  std::vector<std::string> lines(runs.size());

  // Each run owns its solver state; rows are ordered deterministically.
  const long total = static_cast<long>(runs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < total; ++i) {
    const BenchRun& run = runs[i];
    Rng rng(run.seed * 7919 + std::hash<std::string>{}(run.problem));
    auto started = std::chrono::steady_clock::now();
    AppResult result;
    Rational opt(-1);
    try {
      if (run.problem == "pack") {
        ExplicitGenOptions gen_options;
        gen_options.ensure_positive_cost = true;
        ExplicitInstance sample = random_explicit_instance(rng, gen_options);
        opt = exact_simplex(build_explicit_lp(sample.instance, sample.generators)).value;
        result = solve_pack(sample.instance, sample.generators, run.eps);
      } else if (run.problem == "mincost-budget") {
        Digraph graph = random_digraph(rng, 6, 12, 9);
        result = solve_budget_mincost(graph, Rational(20), run.eps);
        std::vector<Rational> costs;
        for (const GraphEdge& e : graph.edges) costs.push_back(e.cost);
        std::vector<Generator> cycles = enumerate_cycles(graph);
        if (!cycles.empty()) {
          opt = exact_simplex(build_explicit_lp(
                                  rebuild_instance(graph, costs, Rational(20)), cycles))
                    .value;
        } else {
          opt = 0;
        }
      } else if (run.problem == "treepack") {
        Digraph graph = random_connected_graph(rng, 5, 4, 9);
        std::vector<Generator> trees = enumerate_trees(graph);
        std::vector<Rational> caps, costs;
        for (const GraphEdge& e : graph.edges) {
          caps.push_back(e.capacity);
          costs.push_back(Rational(1) / Rational(graph.num_nodes - 1));
        }
        opt = exact_simplex(build_explicit_lp(build_edge_instance(caps, costs, {}), trees)).value;
        result = solve_treepack(graph, false, run.eps);
      } else if (run.problem == "basepack") {
        const int m = 6;
        auto matroid = std::make_shared<UniformMatroid>(3, m);
        std::vector<Rational> caps;
        for (int i = 0; i < m; ++i) caps.push_back(Rational(1 + static_cast<long>(rng() % 4)));
        std::vector<Generator> bases = enumerate_bases(*matroid);
        std::vector<Rational> costs(m, Rational(1) / Rational(matroid->rank()));
        opt = exact_simplex(build_explicit_lp(build_edge_instance(caps, costs, {}), bases)).value;
        result = solve_basepack(matroid, caps, nullptr, run.eps);
      } else {
        ProcessingNetwork network = random_processing_network(rng, 5, 3, 6);
        std::vector<Generator> schemes = enumerate_schemes(network);
        std::vector<Rational> caps, costs;
        for (const GraphEdge& e : network.graph.edges) {
          caps.push_back(e.capacity);
          costs.push_back(e.head == *network.graph.sink ? Rational(1) : Rational(0));
        }
        if (!schemes.empty()) {
          opt = exact_simplex(build_explicit_lp(build_edge_instance(caps, costs, {}), schemes))
                    .value;
        }
        result = solve_gpn(network, run.eps, GpnObjective::MaxFlow);
      }
    } catch (const std::exception& err) {
      std::ostringstream line;
      line << run.problem << ',' << run.seed << ',' << to_string(run.eps)
           << ",error,,,,,,\"" << err.what() << "\"";
      lines[i] = line.str();
      continue;
    }
    double wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    std::ostringstream line;
    line << run.problem << ',' << run.seed << ',' << to_string(run.eps) << ','
         << result.solution.objective << ',';
    if (sgn(opt) > 0) {
      line << to_string(opt) << ',' << result.solution.objective / to_double(opt);
    } else if (sgn(opt) == 0) {
      line << "0,";
    } else {
      line << ',';
    }
    line << ',' << (result.solution.feasible ? 1 : 0) << ',' << result.solution.iterations << ','
         << result.solution.oracle_calls << ',' << wall_ms;
    lines[i] = line.str();
  }

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      throw std::system_error(ENOENT, std::generic_category(), "cannot write '" + out_path + "'");
    }
    out = &file;
  }
  *out << "problem,seed,eps,objective,opt,ratio,feasible,iterations,oracle_calls,wall_ms\n";
  for (const std::string& line : lines) *out << line << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"approximate packing over finitely generated cones"};
  app.require_subcommand(1);

  CommonOptions options;
  std::string solution_path;
  std::string bench_out;
  std::string gpn_objective = "maxflow";
  bool weighted = false;

  CLI::App* pack = app.add_subcommand("pack", "explicit-set packing instance (JSON)");
  add_common(pack, options);
  CLI::App* maxflow = app.add_subcommand("maxflow-budget", "budget-constrained maximum flow");
  add_common(maxflow, options);
  CLI::App* mincost = app.add_subcommand("mincost-budget", "budget-constrained min-cost circulation");
  add_common(mincost, options);
  CLI::App* gpn = app.add_subcommand("gpn", "flows in generalized processing networks");
  add_common(gpn, options);
  gpn->add_option("--objective", gpn_objective, "maxflow or mincost")
      ->check(CLI::IsMember({"maxflow", "mincost"}));
  CLI::App* concurrent = app.add_subcommand("concurrent", "maximum concurrent flow");
  add_common(concurrent, options);
  CLI::App* mcf = app.add_subcommand("mcf-weighted", "maximum weighted multicommodity flow");
  add_common(mcf, options);
  CLI::App* treepack = app.add_subcommand("treepack", "fractional spanning-tree packing");
  add_common(treepack, options);
  treepack->add_flag("--weighted", weighted, "use edge costs as tree weights");
  CLI::App* basepack = app.add_subcommand("basepack", "fractional matroid base packing");
  add_common(basepack, options);
  basepack->add_flag("--weighted", weighted, "use element weights");
  CLI::App* verify = app.add_subcommand("verify", "re-check a solution file exactly");
  add_common(verify, options);
  verify->add_option("--solution", solution_path, "solution JSON to verify")->required();
  CLI::App* bench = app.add_subcommand("bench", "seeded random benchmark matrix (CSV)");
  add_common(bench, options, false);
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    const Rational eps = parse_eps(options.eps_text);
    const BoundMode mode = parse_bound(options.bound);
    auto started = std::chrono::steady_clock::now();
    auto wall = [&] {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();
    };

    if (pack->parsed()) {
      Json doc = read_json_file(options.input);
      PackingInstance instance = instance_from_json(doc);
      std::vector<Generator> generators = generators_from_json(doc, instance.cols());
      AppResult result = solve_pack(instance, generators, eps, mode);
      emit(make_report("pack", eps, options, result, instance, wall()), result, options);
      return 0;
    }
    if (maxflow->parsed()) {
      DimacsProblem problem = read_problem(options.input);
      Rational budget = resolve_budget(options, problem);
      AppResult result = solve_budget_maxflow(problem.graph, budget, eps);
      std::vector<Rational> costs(problem.graph.edges.size(), Rational(0));
      for (size_t e = 0; e < problem.graph.edges.size(); ++e) {
        if (problem.graph.edges[e].head == *problem.graph.sink) costs[e] = 1;
      }
      PackingInstance instance = rebuild_instance(problem.graph, costs, budget);
      emit(make_report("maxflow-budget", eps, options, result, instance, wall()), result, options);
      return 0;
    }
    if (mincost->parsed()) {
      DimacsProblem problem = read_problem(options.input);
      Rational budget = resolve_budget(options, problem);
      AppResult result = solve_budget_mincost(problem.graph, budget, eps, mode);
      std::vector<Rational> costs;
      for (const GraphEdge& e : problem.graph.edges) costs.push_back(e.cost);
      PackingInstance instance = rebuild_instance(problem.graph, costs, budget);
      emit(make_report("mincost-budget", eps, options, result, instance, wall()), result, options);
      return 0;
    }
    if (gpn->parsed()) {
      DimacsProblem problem = read_problem(options.input);
      ProcessingNetwork network{problem.graph, problem.alpha};
      GpnObjective objective =
          gpn_objective == "mincost" ? GpnObjective::MinCost : GpnObjective::MaxFlow;
      AppResult result = solve_gpn(network, eps, objective, mode);
      std::vector<Rational> costs;
      for (const GraphEdge& e : problem.graph.edges) {
        costs.push_back(objective == GpnObjective::MinCost
                            ? e.cost
                            : (e.head == *problem.graph.sink ? Rational(1) : Rational(0)));
      }
      PackingInstance instance = rebuild_instance(problem.graph, costs, std::nullopt);
      emit(make_report("gpn", eps, options, result, instance, wall()), result, options);
      return 0;
    }
    if (concurrent->parsed()) {
      DimacsProblem problem = read_problem(options.input);
      AppResult result = solve_concurrent(problem.graph, problem.commodities, eps);
      std::vector<Rational> costs(problem.graph.edges.size(), Rational(0));
      PackingInstance instance = rebuild_instance(problem.graph, costs, std::nullopt);
      emit(make_report("concurrent", eps, options, result, instance, wall()), result, options);
      return 0;
    }
    if (mcf->parsed()) {
      DimacsProblem problem = read_problem(options.input);
      AppResult result = solve_weighted_mcf(problem.graph, problem.commodities, eps);
      std::vector<Rational> costs(problem.graph.edges.size(), Rational(0));
      PackingInstance instance = rebuild_instance(problem.graph, costs, std::nullopt);
      emit(make_report("mcf-weighted", eps, options, result, instance, wall()), result, options);
      return 0;
    }
    if (treepack->parsed()) {
      DimacsProblem problem = read_problem(options.input);
      AppResult result = solve_treepack(problem.graph, weighted, eps, mode);
      const Rational per_tree(problem.graph.num_nodes - 1);
      std::vector<Rational> costs;
      for (const GraphEdge& e : problem.graph.edges) {
        costs.push_back((weighted ? e.cost : Rational(1)) / per_tree);
      }
      PackingInstance instance = rebuild_instance(problem.graph, costs, std::nullopt);
      emit(make_report("treepack", eps, options, result, instance, wall()), result, options);
      return 0;
    }
    if (basepack->parsed()) {
      Json doc = read_json_file(options.input);
      std::shared_ptr<Matroid> matroid = matroid_from_json(doc);
      std::vector<Rational> caps(matroid->ground_size(), Rational(1));
      if (doc.contains("capacities")) {
        caps.clear();
        for (const Json& value : doc.at("capacities")) caps.push_back(rational_from_json(value));
      }
      std::optional<std::vector<Rational>> weights;
      if (weighted) {
        if (!doc.contains("weights")) fail(Errc::ParseError, "--weighted needs a 'weights' array");
        weights.emplace();
        for (const Json& value : doc.at("weights")) weights->push_back(rational_from_json(value));
      }
      AppResult result = solve_basepack(matroid, caps, weights ? &*weights : nullptr, eps, mode);
      const Rational rank(matroid->rank());
      std::vector<Rational> costs(matroid->ground_size(), Rational(0));
      for (int i = 0; i < matroid->ground_size(); ++i) {
        costs[i] = (weights ? (*weights)[i] : Rational(1)) / rank;
      }
      PackingInstance instance = build_edge_instance(caps, costs, {});
      emit(make_report("basepack", eps, options, result, instance, wall()), result, options);
      return 0;
    }
    if (verify->parsed()) {
      return run_verify(options, solution_path);
    }
    if (bench->parsed()) {
      return run_bench(options, bench_out);
    }
    return kExitUsage;
  } catch (const CLI::ValidationError& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::system_error& err) {
    std::cerr << "file error: " << err.what() << '\n';
    return kExitFile;
  } catch (const conepack::SolverError& err) {
    std::cerr << "error (" << errc_name(err.code()) << "): " << err.what() << '\n';
    return kExitSolver;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitSolver;
  }
}
