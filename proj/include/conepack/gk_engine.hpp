#pragma once

#include <functional>
#include <optional>
#include <string>

#include "conepack/instance.hpp"
#include "conepack/oracle.hpp"

namespace conepack {

struct EngineConfig {
  ApproxParams params;
  // Safety cap on augment steps; defaults to 10x the analyzed bound.
  std::optional<long> max_iterations;
  // Verify c^T g against c-hat for every certificate in the uniform loop.
  bool check_certificate_cost = true;
  // Keep full generators in the solve log (disable for large runs).
  bool record_generators = true;
  // Test hooks.  lambda_auditor returns lambda* for the current reduced
  // costs; when set, the loop checks lambda_lower <= lambda* after every
  // raise and throws BoundNotLower on violation.
  std::function<Rational(std::span<const double> a)> lambda_auditor;
  std::function<void(const DualState&)> on_augment;
};

struct StepSize {
  double nu = 0.0;
  std::vector<std::pair<int, double>> row_loads;  // rows i with r_i > 0
};

// nu = min over loaded rows of b_i / r_i where r = A g.
StepSize step_size(const PackingInstance& instance, const Generator& generator);

// One Garg-Koenemann update: raw_primal += nu*g, y_i *= 1 + eps' nu r_i/b_i,
// incremental refresh of a and the dual value.
void augment(DualState& state, const PackingInstance& instance, const ApproxParams& params,
             const Generator& generator, const StepSize& step);

Solution scale_to_feasible(const PackingInstance& instance, const std::vector<double>& raw_primal,
                           const ApproxParams& params);

struct RunResult {
  Solution solution;
  SolveLog log;
  std::string note;
};

// Uniform-cost fast path: every generator costs exactly c_hat > 0.
RunResult run_uniform(const PackingInstance& instance, const EngineConfig& config,
                      const ConeOracle& minimizing_oracle, const Rational& c_hat);

// General two-case loop with lower bound lambda_lower; the oracle is used
// with separation semantics (certificate iff cost < 0).
RunResult run_general(const PackingInstance& instance, const EngineConfig& config,
                      const ConeOracle& oracle, const Rational& initial_lambda);

// Analyzed step bounds (criterion inputs, also used for the safety caps).
double augment_step_bound(const ApproxParams& params);
double bound_raise_bound(const ApproxParams& params);
double final_scale_factor(const ApproxParams& params);

}  // namespace conepack
