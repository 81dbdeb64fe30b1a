#pragma once

#include <memory>
#include <string>
#include <vector>

#include "conepack/gk_engine.hpp"
#include "conepack/graph.hpp"
#include "conepack/instance.hpp"
#include "conepack/matroid.hpp"
#include "conepack/oracle.hpp"

namespace conepack {

enum class BoundMode { Weak, Parametric };
enum class GpnObjective { MaxFlow, MinCost };

// Extra packing row over the columns of an edge/element instance.
struct BudgetRow {
  std::vector<Rational> coefficients;  // >= 0, one per column
  Rational limit;                      // > 0
};

struct AppResult {
  Solution solution;
  SolveLog log;
  std::string note;
  long bound_probes = 0;
  double lambda_initial = 0.0;
};

// Shortest s-t path as a minimizing oracle over unit path flows.
class StPathOracle : public ConeOracle {
 public:
  explicit StPathOracle(Digraph graph);
  OracleLevel level() const override { return OracleLevel::Minimizing; }
  int dimension() const override { return static_cast<int>(graph_.edges.size()); }
  CostModel cost_model() const override { return {true, Rational(1)}; }
  OracleReply<double> query(std::span<const double> d) const override;
  OracleReply<Rational> query_exact(const std::vector<Rational>& d) const override;

 private:
  Digraph graph_;
  Adjacency adjacency_;
};

// Karp minimum mean cycle as a sign oracle over unit cycle flows; float
// queries are lifted to exact rationals at the boundary.
class CycleSignOracle : public ConeOracle {
 public:
  explicit CycleSignOracle(Digraph graph);
  OracleLevel level() const override { return OracleLevel::Sign; }
  int dimension() const override { return static_cast<int>(graph_.edges.size()); }
  OracleReply<double> query(std::span<const double> d) const override;
  OracleReply<Rational> query_exact(const std::vector<Rational>& d) const override;
  std::optional<Generator> query_parametric(const std::vector<Affine>& d) const override;

 private:
  Digraph graph_;
};

// Cheapest unit flow over basic distribution schemes (minimizing).
class SchemeOracle : public ConeOracle {
 public:
  explicit SchemeOracle(ProcessingNetwork network);
  OracleLevel level() const override { return OracleLevel::Minimizing; }
  int dimension() const override { return static_cast<int>(network_.graph.edges.size()); }
  OracleReply<double> query(std::span<const double> d) const override;
  OracleReply<Rational> query_exact(const std::vector<Rational>& d) const override;
  std::optional<Generator> query_parametric(const std::vector<Affine>& d) const override;
  const ProcessingNetwork& network() const { return network_; }

 private:
  ProcessingNetwork network_;
};

// Minimum spanning tree (minimizing; doubles as the sign oracle for the
// weighted packing variant).
class TreeOracle : public ConeOracle {
 public:
  explicit TreeOracle(Digraph graph);
  OracleLevel level() const override { return OracleLevel::Minimizing; }
  int dimension() const override { return static_cast<int>(graph_.edges.size()); }
  OracleReply<double> query(std::span<const double> d) const override;
  OracleReply<Rational> query_exact(const std::vector<Rational>& d) const override;
  std::optional<Generator> query_parametric(const std::vector<Affine>& d) const override;

 private:
  Digraph graph_;
};

// Greedy minimum-cost matroid basis (minimizing).
class BasisOracle : public ConeOracle {
 public:
  explicit BasisOracle(std::shared_ptr<const Matroid> matroid);
  OracleLevel level() const override { return OracleLevel::Minimizing; }
  int dimension() const override { return matroid_->ground_size(); }
  OracleReply<double> query(std::span<const double> d) const override;
  OracleReply<Rational> query_exact(const std::vector<Rational>& d) const override;
  std::optional<Generator> query_parametric(const std::vector<Affine>& d) const override;

 private:
  std::shared_ptr<const Matroid> matroid_;
};

// One shortest-path tree per distinct source; the generator superposes the
// commodities' paths scaled by their demands.
class ConcurrentOracle : public ConeOracle {
 public:
  ConcurrentOracle(Digraph graph, std::vector<Commodity> commodities);
  OracleLevel level() const override { return OracleLevel::Minimizing; }
  int dimension() const override { return static_cast<int>(graph_.edges.size()); }
  CostModel cost_model() const override { return {true, Rational(1)}; }
  OracleReply<double> query(std::span<const double> d) const override;
  OracleReply<Rational> query_exact(const std::vector<Rational>& d) const override;

 private:
  template <class Tree>
  Generator assemble(const std::vector<Tree>& trees) const;

  Digraph graph_;
  Adjacency adjacency_;
  std::vector<Commodity> commodities_;
  std::vector<int> sources_;            // distinct sources
  std::vector<int> source_index_;       // commodity -> index into sources_
};

// Cheapest single commodity path carrying flow 1/c_j (uniform cost 1).
class WeightedMcfOracle : public ConeOracle {
 public:
  WeightedMcfOracle(Digraph graph, std::vector<Commodity> commodities);
  OracleLevel level() const override { return OracleLevel::Minimizing; }
  int dimension() const override { return static_cast<int>(graph_.edges.size()); }
  CostModel cost_model() const override { return {true, Rational(1)}; }
  OracleReply<double> query(std::span<const double> d) const override;
  OracleReply<Rational> query_exact(const std::vector<Rational>& d) const override;

 private:
  Digraph graph_;
  Adjacency adjacency_;
  std::vector<Commodity> commodities_;
  std::vector<int> sources_;
  std::vector<int> source_index_;
};

// Capacity rows x_j <= u_j plus optional extra packing rows.
PackingInstance build_edge_instance(const std::vector<Rational>& capacities,
                                    const std::vector<Rational>& costs,
                                    const std::vector<BudgetRow>& budget_rows);

AppResult solve_budget_maxflow(const Digraph& graph, const Rational& budget, const Rational& eps,
                               const std::vector<BudgetRow>& extra_rows = {});
AppResult solve_budget_mincost(const Digraph& graph, const Rational& budget, const Rational& eps,
                               BoundMode mode = BoundMode::Weak,
                               const std::vector<BudgetRow>& extra_rows = {});
AppResult solve_gpn(const ProcessingNetwork& network, const Rational& eps, GpnObjective objective,
                    BoundMode mode = BoundMode::Weak);
AppResult solve_concurrent(const Digraph& graph, const std::vector<Commodity>& commodities,
                           const Rational& eps, const std::vector<BudgetRow>& extra_rows = {});
AppResult solve_weighted_mcf(const Digraph& graph, const std::vector<Commodity>& commodities,
                             const Rational& eps);
AppResult solve_treepack(const Digraph& graph, bool weighted, const Rational& eps,
                         BoundMode mode = BoundMode::Weak);
AppResult solve_basepack(std::shared_ptr<const Matroid> matroid,
                         const std::vector<Rational>& capacities,
                         const std::vector<Rational>* weights, const Rational& eps,
                         BoundMode mode = BoundMode::Weak);
AppResult solve_pack(const PackingInstance& instance, std::vector<Generator> generators,
                     const Rational& eps, BoundMode mode = BoundMode::Weak,
                     const EngineConfig* base_config = nullptr);

}  // namespace conepack
