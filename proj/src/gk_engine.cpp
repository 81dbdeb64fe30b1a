#include "conepack/gk_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "conepack/kernels.hpp"

namespace conepack {

namespace {

constexpr long kRecomputeEvery = 1000;  // guards against float drift

void refresh_state(DualState& state, const PackingInstance& instance) {
  kernels::reduced_costs(instance, state.y, state.a);
  state.dual_value = kernels::dual_value(instance.capacities_d(), state.y);
}

long default_cap(const EngineConfig& config) {
  if (config.max_iterations) return *config.max_iterations;
  double bound = 10.0 * (augment_step_bound(config.params) + 1.0);
  if (bound > 9e18) return static_cast<long>(9e18);
  return static_cast<long>(bound) + 1;
}

void log_augment(SolveLog& log, const EngineConfig& config, const Generator& generator,
                 double nu, double lambda_lower) {
  SolveStep step;
  step.kind = SolveStep::Kind::Augment;
  if (config.record_generators) step.generator = generator;
  step.nu = nu;
  step.lambda_lower = lambda_lower;
  log.steps.push_back(std::move(step));
  ++log.augment_steps;
}

}  // namespace

StepSize step_size(const PackingInstance& instance, const Generator& generator) {
  StepSize result;
  // r_i = A_{i.} g over the rows touched by the generator's support.
  std::vector<double> loads(instance.rows(), 0.0);
  std::vector<int> touched;
  for (const auto& [col, value] : generator.entries()) {
    const double gv = to_double(value);
    for (const auto& entry : instance.column(col)) {
      if (loads[entry.index] == 0.0) touched.push_back(entry.index);
      loads[entry.index] += entry.value_d * gv;
    }
  }
  if (touched.empty()) {
    fail(Errc::ZeroLoad, "generator loads no row; oracle and instance disagree");
  }
  std::sort(touched.begin(), touched.end());
  result.row_loads.reserve(touched.size());
  double nu = std::numeric_limits<double>::infinity();
  for (int row : touched) {
    result.row_loads.emplace_back(row, loads[row]);
    nu = std::min(nu, instance.capacities_d()[row] / loads[row]);
  }
  result.nu = nu;
  return result;
}

void augment(DualState& state, const PackingInstance& instance, const ApproxParams& params,
             const Generator& generator, const StepSize& step) {
  const double ep = params.epsilon_prime_d();
  for (const auto& [col, value] : generator.entries()) {
    state.raw_primal[col] += step.nu * to_double(value);
  }
  for (const auto& [row, load] : step.row_loads) {
    const double b = instance.capacities_d()[row];
    const double delta_y = state.y[row] * ep * step.nu * load / b;
    state.y[row] += delta_y;
    state.dual_value += b * delta_y;
    // Only columns sharing a row with the generator change.
    for (const auto& entry : instance.row(row)) {
      state.a[entry.index] += delta_y * entry.value_d;
    }
  }
  ++state.iterations;
  if (state.iterations % kRecomputeEvery == 0) {
    refresh_state(state, instance);
  }
}

Solution scale_to_feasible(const PackingInstance& instance, const std::vector<double>& raw_primal,
                           const ApproxParams& params) {
  Solution solution;
  const double scale = final_scale_factor(params);
  solution.x.resize(raw_primal.size());
  for (size_t j = 0; j < raw_primal.size(); ++j) solution.x[j] = raw_primal[j] / scale;

  // Exact componentwise feasibility check on the lifted solution.
  std::vector<Rational> x_exact;
  x_exact.reserve(solution.x.size());
  for (double v : solution.x) x_exact.push_back(rational_of(v));
  for (int i = 0; i < instance.rows(); ++i) {
    Rational load = 0;
    for (const auto& entry : instance.row(i)) load += entry.value * x_exact[entry.index];
    if (load > instance.capacities()[i]) {
      fail(Errc::InfeasibleAfterScaling,
           "row " + std::to_string(i) + " violated after final scaling");
    }
  }
  solution.feasible = true;

  double objective = 0.0;
  for (size_t j = 0; j < solution.x.size(); ++j) {
    objective += instance.costs_d()[j] * solution.x[j];
  }
  solution.objective = objective;
  return solution;
}

RunResult run_uniform(const PackingInstance& instance, const EngineConfig& config,
                      const ConeOracle& minimizing_oracle, const Rational& c_hat) {
  if (sgn(c_hat) <= 0) fail(Errc::InvalidArgument, "uniform cost c-hat must be positive");
  const ApproxParams& params = config.params;
  const double c_hat_d = to_double(c_hat);
  const long cap = default_cap(config);

  DualState state = init_duals(instance, params);
  SolveLog log;
  long oracle_calls = 0;
  std::vector<double> d(instance.cols());

  while (state.dual_value < 1.0) {
    if (state.iterations >= cap) {
      fail(Errc::IterationCapExceeded, "uniform loop exceeded the iteration cap");
    }
    for (int j = 0; j < instance.cols(); ++j) d[j] = state.a[j] / c_hat_d;
    OracleReply<double> reply = minimizing_oracle.query(d);
    ++oracle_calls;
    if (!reply.generator) {
      fail(Errc::Internal, "minimizing oracle returned no generator");
    }
    if (config.check_certificate_cost) {
      const double cost = reply.generator->dot(instance.costs_d());
      if (std::abs(cost - c_hat_d) > 1e-9 * std::abs(c_hat_d)) {
        fail(Errc::CostMismatch, "certificate cost deviates from the uniform cost");
      }
    }
    StepSize step = step_size(instance, *reply.generator);
    augment(state, instance, params, *reply.generator, step);
    log_augment(log, config, *reply.generator, step.nu, 0.0);
    if (config.on_augment) config.on_augment(state);
  }

  RunResult result;
  result.solution = scale_to_feasible(instance, state.raw_primal, params);
  result.solution.iterations = state.iterations;
  result.solution.oracle_calls = oracle_calls;
  result.log = std::move(log);
  result.log.final_scale = final_scale_factor(params);
  return result;
}

RunResult run_general(const PackingInstance& instance, const EngineConfig& config,
                      const ConeOracle& oracle, const Rational& initial_lambda) {
  const ApproxParams& params = config.params;
  if (sgn(initial_lambda) <= 0) {
    fail(Errc::InvalidArgument, "initial lower bound must be positive");
  }

  RunResult result;

  // A cone with no positive-cost direction packs nothing.
  bool any_positive_cost = false;
  for (const Rational& c : instance.costs()) {
    if (sgn(c) > 0) {
      any_positive_cost = true;
      break;
    }
  }
  if (!any_positive_cost) {
    result.solution = scale_to_feasible(instance, std::vector<double>(instance.cols(), 0.0), params);
    result.note = "all costs non-positive; zero solution is optimal";
    result.log.final_scale = final_scale_factor(params);
    return result;
  }

  const long cap = default_cap(config);
  const long raise_cap = static_cast<long>(bound_raise_bound(params));
  const Rational one_plus_eps = 1 + params.epsilon;

  DualState state = init_duals(instance, params);
  SolveLog log;
  long oracle_calls = 0;

  // lambda_lower is kept as an exact dyadic rational: raises compute
  // (1+eps)*lambda exactly and round the result down to the nearest double,
  // which preserves the lower-bound property while keeping probe vectors
  // small.
  Rational lambda_lower = rational_of(double_below(initial_lambda));
  if (sgn(lambda_lower) <= 0) lambda_lower = initial_lambda;
  log.lambda_lower_initial = to_double(lambda_lower);

  auto audit = [&]() {
    if (!config.lambda_auditor) return;
    Rational lambda_star = config.lambda_auditor(state.a);
    if (lambda_lower > lambda_star) {
      fail(Errc::BoundNotLower, "lambda lower bound exceeds lambda*");
    }
  };
  audit();

  std::vector<Rational> d(instance.cols());
  long raises = 0;
  while (state.dual_value < 1.0) {
    if (state.iterations >= cap) {
      fail(Errc::IterationCapExceeded, "general loop exceeded the iteration cap");
    }
    // Probe at d((1+eps) * lambda_lower), built exactly from the lifted
    // float reduced costs.
    const Rational mu = one_plus_eps * lambda_lower;
    for (int j = 0; j < instance.cols(); ++j) {
      d[j] = rational_of(state.a[j]) - mu * instance.costs()[j];
    }
    OracleReply<Rational> reply = oracle.query_exact(d);
    ++oracle_calls;
    const bool violated = reply.generator && sgn(reply.cost) < 0;
    if (violated) {
      // Case 1: approximately most violated constraint; augment.
      StepSize step = step_size(instance, *reply.generator);
      augment(state, instance, params, *reply.generator, step);
      log_augment(log, config, *reply.generator, step.nu, to_double(lambda_lower));
      if (config.on_augment) config.on_augment(state);
    } else {
      // Case 2: no violation at (1+eps)*lambda_lower, so lambda* is at
      // least that large; raise the bound.
      if (raises >= raise_cap) {
        result.note = "lower-bound raises exhausted; no positive-cost generator reachable";
        break;
      }
      lambda_lower = rational_of(double_below(mu));
      ++raises;
      SolveStep step;
      step.kind = SolveStep::Kind::BoundRaise;
      step.lambda_lower = to_double(lambda_lower);
      log.steps.push_back(std::move(step));
      ++log.bound_raises;
      audit();
    }
  }

  result.solution = scale_to_feasible(instance, state.raw_primal, params);
  result.solution.iterations = state.iterations;
  result.solution.oracle_calls = oracle_calls;
  result.log = std::move(log);
  result.log.final_scale = final_scale_factor(params);
  result.log.lambda_lower_final = to_double(lambda_lower);
  return result;
}

double augment_step_bound(const ApproxParams& params) {
  const double ep = params.epsilon_prime_d();
  const double m = params.num_rows;
  return (1.0 / ep) * m * (1.0 + std::log(m) / std::log1p(ep));
}

double bound_raise_bound(const ApproxParams& params) {
  // log_{1+eps}((1+eps) m^{m/eps} / delta) + 1, computed in log space.
  const double eps = params.epsilon_d();
  const double m = params.num_rows;
  const double log1pe = std::log1p(eps);
  const double numerator = std::log1p(eps) + (m / eps) * std::log(m) - std::log(params.delta);
  return numerator / log1pe + 1.0;
}

double final_scale_factor(const ApproxParams& params) {
  const double ep = params.epsilon_prime_d();
  return std::log((1.0 + ep) / params.delta) / std::log1p(ep);
}

}  // namespace conepack
