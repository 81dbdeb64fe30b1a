#pragma once

#include <random>
#include <vector>

#include "conepack/graph.hpp"
#include "conepack/instance.hpp"

namespace conepack {

using Rng = std::mt19937_64;

struct ExplicitGenOptions {
  int min_rows = 2, max_rows = 8;
  int min_cols = 2, max_cols = 8;
  int max_generators = 12;
  int max_value = 20;      // numerators and denominators stay below this
  bool integral_b = false; // keep b integral (bracket-friendly data)
  bool integral_c = false;
  bool unit_generators = false;  // 0/1 generator entries
  bool ensure_positive_cost = false;
};

struct ExplicitInstance {
  PackingInstance instance;
  std::vector<Generator> generators;
};

ExplicitInstance random_explicit_instance(Rng& rng, const ExplicitGenOptions& options);

// Random digraph with signed rational edge costs; parallel edges allowed.
Digraph random_digraph(Rng& rng, int num_nodes, int num_edges, int max_value);

// Connected: chain backbone 0 -> 1 -> ... -> n-1 plus random extras; source 0
// and sink n-1 designated.
Digraph random_flow_network(Rng& rng, int num_nodes, int num_edges, int max_value);

// Connected undirected graph (spanning-tree backbone plus extras).
Digraph random_connected_graph(Rng& rng, int num_nodes, int extra_edges, int max_value);

// Acyclic processing network with ratios summing to >= 1 at covered nodes.
ProcessingNetwork random_processing_network(Rng& rng, int num_nodes, int max_out_degree,
                                            int max_value);

std::vector<Commodity> random_commodities(Rng& rng, int num_nodes, int count, int max_value);

Rational random_positive_rational(Rng& rng, int max_value, bool integral);
Rational random_signed_rational(Rng& rng, int max_value, bool integral);

}  // namespace conepack
