#include "conepack/instance_gen.hpp"

#include <algorithm>
#include <set>

namespace conepack {

namespace {

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

}  // namespace

Rational random_positive_rational(Rng& rng, int max_value, bool integral) {
  int num = uniform_int(rng, 1, max_value);
  int den = integral ? 1 : uniform_int(rng, 1, max_value);
  return make_ratio(num, den);
}

Rational random_signed_rational(Rng& rng, int max_value, bool integral) {
  int num = uniform_int(rng, -max_value, max_value);
  int den = integral ? 1 : uniform_int(rng, 1, max_value);
  return make_ratio(num, den);
}

ExplicitInstance random_explicit_instance(Rng& rng, const ExplicitGenOptions& options) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int m = uniform_int(rng, options.min_rows, options.max_rows);
    const int n = uniform_int(rng, options.min_cols, options.max_cols);

    std::vector<Triple> triples;
    std::vector<std::vector<bool>> present(m, std::vector<bool>(n, false));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) {
        if (coin(rng, 0.45)) {
          present[i][j] = true;
          triples.push_back({i, j, random_positive_rational(rng, options.max_value, false)});
        }
      }
    }
    // Repair empty rows and columns.
    for (int i = 0; i < m; ++i) {
      if (std::none_of(present[i].begin(), present[i].end(), [](bool x) { return x; })) {
        int j = uniform_int(rng, 0, n - 1);
        present[i][j] = true;
        triples.push_back({i, j, random_positive_rational(rng, options.max_value, false)});
      }
    }
    for (int j = 0; j < n; ++j) {
      bool hit = false;
      for (int i = 0; i < m; ++i) hit = hit || present[i][j];
      if (!hit) {
        int i = uniform_int(rng, 0, m - 1);
        present[i][j] = true;
        triples.push_back({i, j, random_positive_rational(rng, options.max_value, false)});
      }
    }

    std::vector<Rational> b, c;
    for (int i = 0; i < m; ++i) b.push_back(random_positive_rational(rng, options.max_value, options.integral_b));
    for (int j = 0; j < n; ++j) {
      Rational value = random_signed_rational(rng, options.max_value, options.integral_c);
      c.push_back(std::move(value));
    }

    const int k = uniform_int(rng, 1, options.max_generators);
    std::vector<Generator> generators;
    for (int l = 0; l < k; ++l) {
      std::vector<std::pair<int, Rational>> entries;
      for (int j = 0; j < n; ++j) {
        if (coin(rng, 0.5)) {
          Rational value = options.unit_generators
                               ? Rational(1)
                               : random_positive_rational(rng, options.max_value, false);
          entries.emplace_back(j, std::move(value));
        }
      }
      if (entries.empty()) {
        entries.emplace_back(uniform_int(rng, 0, n - 1),
                             options.unit_generators
                                 ? Rational(1)
                                 : random_positive_rational(rng, options.max_value, false));
      }
      generators.emplace_back(std::move(entries));
    }

    PackingInstance instance = new_instance(m, n, std::move(triples), std::move(b), c);
    if (options.ensure_positive_cost) {
      bool ok = false;
      for (const Generator& g : generators) {
        if (sgn(g.dot(instance.costs())) > 0) ok = true;
      }
      if (!ok) continue;
    }
    return {std::move(instance), std::move(generators)};
  }
  fail(Errc::Internal, "could not generate an instance with a positive-cost generator");
}

Digraph random_digraph(Rng& rng, int num_nodes, int num_edges, int max_value) {
  Digraph graph;
  graph.num_nodes = num_nodes;
  for (int e = 0; e < num_edges; ++e) {
    GraphEdge edge;
    edge.tail = uniform_int(rng, 0, num_nodes - 1);
    do {
      edge.head = uniform_int(rng, 0, num_nodes - 1);
    } while (edge.head == edge.tail);
    edge.capacity = random_positive_rational(rng, max_value, false);
    edge.cost = random_signed_rational(rng, max_value, false);
    edge.fee = coin(rng) ? Rational(uniform_int(rng, 0, max_value)) : Rational(0);
    graph.edges.push_back(std::move(edge));
  }
  return graph;
}

Digraph random_flow_network(Rng& rng, int num_nodes, int num_edges, int max_value) {
  Digraph graph;
  graph.num_nodes = num_nodes;
  graph.source = 0;
  graph.sink = num_nodes - 1;
  for (int v = 0; v + 1 < num_nodes; ++v) {
    GraphEdge edge;
    edge.tail = v;
    edge.head = v + 1;
    edge.capacity = Rational(uniform_int(rng, 1, max_value));
    edge.cost = 0;
    edge.fee = Rational(uniform_int(rng, 0, 3));
    graph.edges.push_back(std::move(edge));
  }
  while (static_cast<int>(graph.edges.size()) < num_edges) {
    GraphEdge edge;
    edge.tail = uniform_int(rng, 0, num_nodes - 1);
    do {
      edge.head = uniform_int(rng, 0, num_nodes - 1);
    } while (edge.head == edge.tail);
    edge.capacity = Rational(uniform_int(rng, 1, max_value));
    edge.cost = 0;
    edge.fee = Rational(uniform_int(rng, 0, 3));
    graph.edges.push_back(std::move(edge));
  }
  return graph;
}

Digraph random_connected_graph(Rng& rng, int num_nodes, int extra_edges, int max_value) {
  Digraph graph;
  graph.num_nodes = num_nodes;
  for (int v = 1; v < num_nodes; ++v) {
    GraphEdge edge;
    edge.tail = uniform_int(rng, 0, v - 1);
    edge.head = v;
    edge.capacity = Rational(uniform_int(rng, 1, max_value));
    edge.cost = random_signed_rational(rng, max_value, true);
    edge.fee = 0;
    graph.edges.push_back(std::move(edge));
  }
  for (int e = 0; e < extra_edges; ++e) {
    GraphEdge edge;
    edge.tail = uniform_int(rng, 0, num_nodes - 1);
    do {
      edge.head = uniform_int(rng, 0, num_nodes - 1);
    } while (edge.head == edge.tail);
    edge.capacity = Rational(uniform_int(rng, 1, max_value));
    edge.cost = random_signed_rational(rng, max_value, true);
    edge.fee = 0;
    graph.edges.push_back(std::move(edge));
  }
  return graph;
}

ProcessingNetwork random_processing_network(Rng& rng, int num_nodes, int max_out_degree,
                                            int max_value) {
  ProcessingNetwork network;
  network.graph.num_nodes = num_nodes;
  network.graph.source = 0;
  network.graph.sink = num_nodes - 1;
  // Nodes are already in topological order; every node keeps a route to the
  // sink through v -> v+1 backbone edges.
  for (int v = 0; v + 1 < num_nodes; ++v) {
    GraphEdge edge;
    edge.tail = v;
    edge.head = v + 1;
    edge.capacity = Rational(uniform_int(rng, 1, max_value));
    edge.cost = random_signed_rational(rng, max_value, true);
    edge.fee = 0;
    network.graph.edges.push_back(std::move(edge));
  }
  for (int v = 0; v + 1 < num_nodes; ++v) {
    const int extras = uniform_int(rng, 0, max_out_degree - 1);
    for (int i = 0; i < extras; ++i) {
      if (v + 2 > num_nodes - 1) break;
      GraphEdge edge;
      edge.tail = v;
      edge.head = uniform_int(rng, v + 2, num_nodes - 1);
      edge.capacity = Rational(uniform_int(rng, 1, max_value));
      edge.cost = random_signed_rational(rng, max_value, true);
      edge.fee = 0;
      network.graph.edges.push_back(std::move(edge));
    }
  }
  network.alpha.resize(network.graph.edges.size(), Rational(1));
  // Random ratios, then repair so every node with outgoing edges can
  // distribute a full unit.
  for (Rational& value : network.alpha) {
    value = make_ratio(uniform_int(rng, 1, 4), 4);
  }
  Adjacency adjacency(network.graph);
  for (int v = 0; v < num_nodes; ++v) {
    auto out = adjacency.out(v);
    if (out.empty()) continue;
    Rational total(0);
    for (int e : out) total += network.alpha[e];
    if (total < 1) network.alpha[out[0]] = 1;
  }
  return network;
}

std::vector<Commodity> random_commodities(Rng& rng, int num_nodes, int count, int max_value) {
  std::vector<Commodity> commodities;
  for (int j = 0; j < count; ++j) {
    Commodity commodity;
    commodity.source = uniform_int(rng, 0, num_nodes - 2);
    commodity.sink = uniform_int(rng, commodity.source + 1, num_nodes - 1);
    commodity.demand = random_positive_rational(rng, max_value, true);
    commodity.weight = random_positive_rational(rng, max_value, true);
    commodities.push_back(std::move(commodity));
  }
  return commodities;
}

}  // namespace conepack
