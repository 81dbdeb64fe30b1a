#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "conepack/graph.hpp"
#include "conepack/instance.hpp"

namespace conepack {

// Nodes lying on some source-sink route; only these carry flow.
std::vector<bool> covered_nodes(const ProcessingNetwork& network);

template <class T>
struct SchemeResult {
  std::vector<Rational> beta;  // per edge; zero off the chosen scheme
  Generator flow;              // unit-value flow induced by the scheme
  T cost{};
};

// Minimum-cost unit flow over basic distribution schemes: reverse
// topological DP with mu(t) = 0; at each covered node the outgoing edges
// are ordered by d_e + mu(head) and filled greedily up to alpha_e, leaving
// at most one fractional edge.
template <class T>
SchemeResult<T> min_cost_scheme_flow(const ProcessingNetwork& network,
                                     const std::vector<T>& edge_cost) {
  const Digraph& graph = network.graph;
  const int source = *graph.source;
  const int sink = *graph.sink;
  auto order = topological_order(graph);
  if (!order) fail(Errc::CyclicNetwork, "processing network must be acyclic");
  std::vector<bool> covered = covered_nodes(network);
  if (!covered[source] || !covered[sink]) {
    fail(Errc::NoPath, "sink unreachable from source");
  }

  Adjacency adjacency(graph);
  const int n = graph.num_nodes;
  std::vector<T> mu(n, T{});
  std::vector<char> has_mu(n, 0);
  has_mu[sink] = 1;
  std::vector<Rational> beta(graph.edges.size(), Rational(0));

  for (auto it = order->rbegin(); it != order->rend(); ++it) {
    const int v = *it;
    if (!covered[v] || v == sink) continue;
    std::vector<int> outgoing;
    for (int e : adjacency.out(v)) {
      if (covered[graph.edges[e].head]) outgoing.push_back(e);
    }
    std::vector<T> key(outgoing.size());
    for (size_t i = 0; i < outgoing.size(); ++i) {
      key[i] = edge_cost[outgoing[i]] + mu[graph.edges[outgoing[i]].head];
    }
    std::vector<size_t> by_key(outgoing.size());
    std::iota(by_key.begin(), by_key.end(), 0);
    std::sort(by_key.begin(), by_key.end(), [&](size_t lhs, size_t rhs) {
      if (key[lhs] < key[rhs]) return true;
      if (key[rhs] < key[lhs]) return false;
      return outgoing[lhs] < outgoing[rhs];
    });
    Rational remaining(1);
    T value{};
    for (size_t i : by_key) {
      if (sgn(remaining) == 0) break;
      const int e = outgoing[i];
      Rational take = std::min(network.alpha[e], remaining);
      beta[e] = take;
      remaining -= take;
      value += scale_term(key[i], take);
    }
    if (sgn(remaining) > 0) {
      fail(Errc::InfeasibleNode,
           "outgoing ratios at node " + std::to_string(v) + " sum below 1");
    }
    mu[v] = std::move(value);
    has_mu[v] = 1;
  }
  if (!has_mu[source]) fail(Errc::Internal, "source skipped by the scheme DP");

  // Push one unit from the source through the chosen scheme.
  std::vector<Rational> inflow(n, Rational(0));
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
  Generator flow(std::move(entries));
  T cost = flow.dot_generic(edge_cost);
  return SchemeResult<T>{std::move(beta), std::move(flow), std::move(cost)};
}

}  // namespace conepack
