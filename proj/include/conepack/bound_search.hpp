#pragma once

#include "conepack/instance.hpp"
#include "conepack/oracle.hpp"
#include "conepack/rational.hpp"

namespace conepack {

// Geometric bracket [delta/M^3, delta*M^3] around the initial lambda*.
struct BoundBracket {
  Rational lambda_lo;
  Rational lambda_hi;
  Integer big_m;
  Rational grid_ratio;      // step between candidate exponents
  long exponent_range = 0;  // number of candidate exponents k
};

// Largest magnitude in the instance data; rationals contribute
// max(|numerator|, denominator), and n, m are included.
Integer compute_M(const PackingInstance& instance);

BoundBracket make_bracket(const PackingInstance& instance, const ApproxParams& params);

// Exact reduced costs for the initial duals y_i = delta/b_i.
std::vector<Rational> initial_reduced_costs(const PackingInstance& instance,
                                            const ApproxParams& params);

struct InitialBound {
  Rational lambda_exact;
  double lambda = 0.0;
  int probes = 0;
  BoundBracket bracket;
};

// Binary search over candidates lambda_lo * ratio^k; returns the largest
// candidate at which the separation probe reports no violation.
InitialBound find_initial_bound(const PackingInstance& instance, const ApproxParams& params,
                                const ConeOracle& oracle);

}  // namespace conepack
