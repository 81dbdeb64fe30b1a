#pragma once

#include "conepack/affine.hpp"
#include "conepack/instance.hpp"
#include "conepack/oracle.hpp"

namespace conepack {

// Classifies a candidate lambda' against lambda* by querying a minimizing
// or sign oracle at d(lambda') = a - lambda' c and taking the certificate's
// cost sign.  The Zero outcome carries the witnessing generator.
SignDecision sign_decision(const std::vector<Rational>& a, const std::vector<Rational>& c,
                           const Rational& lambda, const ConeOracle& oracle);

// Upgrades a separation oracle to a sign decider: a certificate at lambda'
// means Negative; otherwise Zero and Positive are separated by probing
// lambda' + delta with adaptive halving of delta.
SignDecider separation_as_sign(const std::vector<Rational>& a, const std::vector<Rational>& c,
                               const ConeOracle& oracle);

// Sign decider for any oracle level (direct for minimizing/sign, upgraded
// for separation).
SignDecider make_sign_decider(const std::vector<Rational>& a, const std::vector<Rational>& c,
                              const ConeOracle& oracle);

struct MostViolated {
  Rational lambda_star;
  Generator witness;
  long resolver_calls = 0;
  long comparisons = 0;
  int probe_calls = 0;  // oracle evaluations made by the deciders
};

// Exact most violated dual constraint via Megiddo's parametric search: the
// oracle's own algorithm runs on costs a - lambda c with comparisons
// resolved through sign probes.  lambda_cap must be an upper bound on every
// generator root; a Positive verdict there means no generator has positive
// cost.
MostViolated most_violated(const std::vector<Rational>& a, const std::vector<Rational>& c,
                           const ConeOracle& oracle, const Rational& lambda_cap,
                           std::function<void(const SearchInterval&)> on_shrink = {});

}  // namespace conepack
