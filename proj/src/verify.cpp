#include "conepack/verify.hpp"

#include <algorithm>
#include <functional>

#include "conepack/scheme.hpp"

namespace conepack {

ExplicitLP build_explicit_lp(const PackingInstance& instance,
                             std::span<const Generator> generators) {
  ExplicitLP lp;
  lp.rhs = instance.capacities();
  lp.objective.reserve(generators.size());
  lp.columns.reserve(generators.size());
  for (const Generator& g : generators) {
    lp.objective.push_back(g.dot(instance.costs()));
    std::vector<Rational> column(instance.rows(), Rational(0));
    for (const auto& [col, value] : g.entries()) {
      for (const auto& entry : instance.column(col)) {
        column[entry.index] += entry.value * value;
      }
    }
    lp.columns.push_back(std::move(column));
  }
  return lp;
}

SimplexResult exact_simplex(const ExplicitLP& lp) {
  const int m = static_cast<int>(lp.rhs.size());
  const int k = static_cast<int>(lp.objective.size());
  for (const Rational& b : lp.rhs) {
    if (sgn(b) <= 0) fail(Errc::InvalidArgument, "simplex expects positive right-hand sides");
  }
  if (k == 0) return {Rational(0), {}};

  // Tableau over structural columns 0..k-1 and slacks k..k+m-1.
  // row i: sum_j T[i][j] var_j = T[i][k+m]; objective row holds reduced costs.
  const int total = k + m;
  std::vector<std::vector<Rational>> tableau(m + 1, std::vector<Rational>(total + 1, Rational(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < k; ++j) tableau[i][j] = lp.columns[j][i];
    tableau[i][k + i] = 1;
    tableau[i][total] = lp.rhs[i];
  }
  for (int j = 0; j < k; ++j) tableau[m][j] = lp.objective[j];
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = k + i;

  while (true) {
    // Bland: entering column = smallest index with positive reduced cost.
    int entering = -1;
    for (int j = 0; j < total; ++j) {
      if (sgn(tableau[m][j]) > 0) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;
    // Ratio test; ties resolved toward the smallest basis variable.
    int leaving = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (sgn(tableau[i][entering]) <= 0) continue;
      Rational ratio = tableau[i][total] / tableau[i][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) {
      fail(Errc::Unbounded, "packing LP is unbounded along column " + std::to_string(entering));
    }
    // Pivot.
    Rational pivot = tableau[leaving][entering];
    for (int j = 0; j <= total; ++j) tableau[leaving][j] /= pivot;
    for (int i = 0; i <= m; ++i) {
      if (i == leaving || sgn(tableau[i][entering]) == 0) continue;
      Rational factor = tableau[i][entering];
      for (int j = 0; j <= total; ++j) tableau[i][j] -= factor * tableau[leaving][j];
    }
    basis[leaving] = entering;
  }

  SimplexResult result;
  result.alpha.assign(k, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < k) result.alpha[basis[i]] = tableau[i][total];
  }
  result.value = 0;
  for (int j = 0; j < k; ++j) result.value += lp.objective[j] * result.alpha[j];
  return result;
}

RatioResult brute_force_ratio(std::span<const Generator> generators,
                              const std::vector<Rational>& a, const std::vector<Rational>& c) {
  for (const Rational& value : a) {
    if (sgn(value) <= 0) fail(Errc::InvalidArgument, "reduced costs must be positive");
  }
  bool found = false;
  RatioResult result;
  for (int l = 0; l < static_cast<int>(generators.size()); ++l) {
    Rational cost = generators[l].dot(c);
    if (sgn(cost) <= 0) continue;
    Rational ratio = generators[l].dot(a) / cost;
    if (!found || ratio < result.lambda_star) {
      result.lambda_star = std::move(ratio);
      result.index = l;
      found = true;
    }
  }
  if (!found) fail(Errc::NoPositiveCost, "no generator has positive cost");
  return result;
}

std::vector<Generator> enumerate_cycles(const Digraph& graph) {
  if (graph.num_nodes > 7) fail(Errc::TooLarge, "cycle enumeration capped at 7 nodes");
  Adjacency adjacency(graph);
  std::vector<Generator> cycles;
  // Each simple cycle is produced exactly once, rooted at its smallest node.
  std::vector<bool> on_path(graph.num_nodes, false);
  std::vector<int> path_edges;
  std::function<void(int, int)> extend = [&](int root, int v) {
    for (int e : adjacency.out(v)) {
      const GraphEdge& edge = graph.edges[e];
      if (edge.head == root) {
        std::vector<std::pair<int, Rational>> entries;
        for (int used : path_edges) entries.emplace_back(used, Rational(1));
        entries.emplace_back(e, Rational(1));
        cycles.emplace_back(std::move(entries));
        continue;
      }
      if (edge.head < root || on_path[edge.head]) continue;
      on_path[edge.head] = true;
      path_edges.push_back(e);
      extend(root, edge.head);
      path_edges.pop_back();
      on_path[edge.head] = false;
    }
  };
  for (int root = 0; root < graph.num_nodes; ++root) {
    on_path[root] = true;
    extend(root, root);
    on_path[root] = false;
  }
  return cycles;
}

std::vector<Generator> enumerate_trees(const Digraph& graph) {
  if (graph.num_nodes > 6) fail(Errc::TooLarge, "tree enumeration capped at 6 nodes");
  const int n = graph.num_nodes;
  const int m = static_cast<int>(graph.edges.size());
  std::vector<Generator> trees;
  if (n - 1 > m) return trees;
  std::vector<int> pick;
  std::function<void(int)> choose = [&](int next) {
    if (static_cast<int>(pick.size()) == n - 1) {
      DisjointSet components(n);
      int merges = 0;
      for (int e : pick) {
        if (components.unite(graph.edges[e].tail, graph.edges[e].head)) ++merges;
      }
      if (merges == n - 1) {
        std::vector<std::pair<int, Rational>> entries;
        for (int e : pick) entries.emplace_back(e, Rational(1));
        trees.emplace_back(std::move(entries));
      }
      return;
    }
    if (next >= m) return;
    if (m - next < n - 1 - static_cast<int>(pick.size())) return;
    pick.push_back(next);
    choose(next + 1);
    pick.pop_back();
    choose(next + 1);
  };
  choose(0);
  return trees;
}

std::vector<Generator> enumerate_bases(const Matroid& matroid) {
  const int m = matroid.ground_size();
  if (m > 12) fail(Errc::TooLarge, "basis enumeration capped at 12 elements");
  const int r = matroid.rank();
  std::vector<Generator> bases;
  std::vector<int> pick;
  std::function<void(int)> choose = [&](int next) {
    if (static_cast<int>(pick.size()) == r) {
      if (matroid.independent(pick)) {
        std::vector<std::pair<int, Rational>> entries;
        for (int e : pick) entries.emplace_back(e, Rational(1));
        bases.emplace_back(std::move(entries));
      }
      return;
    }
    if (next >= m || m - next < r - static_cast<int>(pick.size())) return;
    pick.push_back(next);
    choose(next + 1);
    pick.pop_back();
    choose(next + 1);
  };
  if (r == 0) return bases;
  choose(0);
  return bases;
}

std::vector<Generator> enumerate_schemes(const ProcessingNetwork& network) {
  const Digraph& graph = network.graph;
  Adjacency adjacency(graph);
  std::vector<bool> covered = covered_nodes(network);
  const int sink = *graph.sink;
  const int source = *graph.source;
  if (!covered[source] || !covered[sink]) return {};

  // Per covered non-sink node, all basic distributions over the covered
  // out-edges: a saturated subset plus at most one fractional edge.
  struct NodeChoice {
    std::vector<std::pair<int, Rational>> assignment;  // (edge, beta)
  };
  std::vector<int> active_nodes;
  std::vector<std::vector<NodeChoice>> choices;
  for (int v = 0; v < graph.num_nodes; ++v) {
    if (!covered[v] || v == sink) continue;
    std::vector<int> outgoing;
    for (int e : adjacency.out(v)) {
      if (covered[graph.edges[e].head]) outgoing.push_back(e);
    }
    if (static_cast<int>(outgoing.size()) > 3) {
      fail(Errc::TooLarge, "scheme enumeration capped at out-degree 3");
    }
    std::vector<NodeChoice> node_choices;
    const int deg = static_cast<int>(outgoing.size());
    for (int mask = 0; mask < (1 << deg); ++mask) {
      Rational saturated(0);
      for (int i = 0; i < deg; ++i) {
        if (mask & (1 << i)) saturated += network.alpha[outgoing[i]];
      }
      if (saturated == 1) {
        NodeChoice choice;
        for (int i = 0; i < deg; ++i) {
          if (mask & (1 << i)) choice.assignment.emplace_back(outgoing[i], network.alpha[outgoing[i]]);
        }
        node_choices.push_back(std::move(choice));
      } else if (saturated < 1) {
        Rational rest = 1 - saturated;
        for (int f = 0; f < deg; ++f) {
          if (mask & (1 << f)) continue;
          if (rest >= network.alpha[outgoing[f]]) continue;  // fractional edge must stay strictly inside
          NodeChoice choice;
          for (int i = 0; i < deg; ++i) {
            if (mask & (1 << i)) choice.assignment.emplace_back(outgoing[i], network.alpha[outgoing[i]]);
          }
          choice.assignment.emplace_back(outgoing[f], rest);
          node_choices.push_back(std::move(choice));
        }
      }
    }
    if (node_choices.empty()) return {};  // some needed node cannot distribute
    active_nodes.push_back(v);
    choices.push_back(std::move(node_choices));
  }

  long combinations = 1;
  for (const auto& per_node : choices) {
    combinations *= static_cast<long>(per_node.size());
    if (combinations > 200000) fail(Errc::TooLarge, "too many scheme combinations");
  }

  auto order = topological_order(graph);
  std::vector<Generator> generators;
  std::vector<int> select(active_nodes.size(), 0);
  std::function<void(size_t)> emit = [&](size_t at) {
    if (at == active_nodes.size()) {
      std::vector<Rational> beta(graph.edges.size(), Rational(0));
      for (size_t i = 0; i < active_nodes.size(); ++i) {
        for (const auto& [e, value] : choices[i][select[i]].assignment) beta[e] = value;
      }
      std::vector<Rational> inflow(graph.num_nodes, Rational(0));
      inflow[source] = 1;
      std::vector<Rational> edge_flow(graph.edges.size(), Rational(0));
      for (int v : *order) {
        if (!covered[v] || v == sink || sgn(inflow[v]) == 0) continue;
        for (int e : adjacency.out(v)) {
          if (sgn(beta[e]) == 0) continue;
          Rational amount = inflow[v] * beta[e];
          edge_flow[e] += amount;
          inflow[graph.edges[e].head] += amount;
        }
      }
      std::vector<std::pair<int, Rational>> entries;
      for (int e = 0; e < static_cast<int>(edge_flow.size()); ++e) {
        if (sgn(edge_flow[e]) > 0) entries.emplace_back(e, edge_flow[e]);
      }
      generators.emplace_back(std::move(entries));
      return;
    }
    for (int pick = 0; pick < static_cast<int>(choices[at].size()); ++pick) {
      select[at] = pick;
      emit(at + 1);
    }
  };
  emit(0);

  // Distinct schemes can induce identical flows; deduplicate.
  std::sort(generators.begin(), generators.end(), [](const Generator& lhs, const Generator& rhs) {
    return lhs.entries() < rhs.entries();
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  return generators;
}

Feasibility check_feasible(const PackingInstance& instance, std::span<const double> x) {
  std::vector<Rational> exact;
  exact.reserve(x.size());
  for (double v : x) exact.push_back(rational_of(v));
  return check_feasible_exact(instance, exact);
}

Feasibility check_feasible_exact(const PackingInstance& instance, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != instance.cols()) {
    fail(Errc::InvalidArgument, "solution length does not match column count");
  }
  Feasibility result;
  bool first = true;
  for (int i = 0; i < instance.rows(); ++i) {
    Rational load = 0;
    for (const auto& entry : instance.row(i)) load += entry.value * x[entry.index];
    Rational violation = (load - instance.capacities()[i]) / instance.capacities()[i];
    if (first || violation > result.worst_violation) {
      result.worst_violation = violation;
      first = false;
    }
  }
  result.feasible = sgn(result.worst_violation) <= 0;
  return result;
}

}  // namespace conepack
