#pragma once

#include <span>
#include <vector>

#include "conepack/graph.hpp"
#include "conepack/instance.hpp"
#include "conepack/matroid.hpp"

namespace conepack {

// Explicit column form of the packing LP over a known generator list:
// max sum_l alpha_l objective_l  s.t.  sum_l alpha_l column_l <= rhs.
struct ExplicitLP {
  std::vector<Rational> objective;            // c^T x^(l) per generator
  std::vector<std::vector<Rational>> columns;  // A x^(l) per generator
  std::vector<Rational> rhs;                   // b
};

ExplicitLP build_explicit_lp(const PackingInstance& instance, std::span<const Generator> generators);

struct SimplexResult {
  Rational value;
  std::vector<Rational> alpha;
};

// Exact primal simplex with Bland's rule; packing LPs are feasible at zero,
// so no phase one is needed.  Throws Unbounded when a positive-cost column
// has no binding row.
SimplexResult exact_simplex(const ExplicitLP& lp);

struct RatioResult {
  Rational lambda_star;
  int index = 0;  // arg-min generator
};

// min over generators with c^T x > 0 of a^T x / c^T x.
RatioResult brute_force_ratio(std::span<const Generator> generators,
                              const std::vector<Rational>& a, const std::vector<Rational>& c);

// Complete duplicate-free enumerations at test scale.
std::vector<Generator> enumerate_cycles(const Digraph& graph);            // n <= 7
std::vector<Generator> enumerate_trees(const Digraph& graph);             // n <= 6
std::vector<Generator> enumerate_bases(const Matroid& matroid);           // m <= 12
std::vector<Generator> enumerate_schemes(const ProcessingNetwork& network);  // out-degree <= 3

struct Feasibility {
  bool feasible = false;
  Rational worst_violation;  // max_i (Ax - b)_i / b_i, negative when slack
};

Feasibility check_feasible(const PackingInstance& instance, std::span<const double> x);
Feasibility check_feasible_exact(const PackingInstance& instance, const std::vector<Rational>& x);

}  // namespace conepack
