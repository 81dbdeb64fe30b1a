#include <doctest.h>

#include <cmath>

#include "conepack/bound_search.hpp"
#include "conepack/gk_engine.hpp"
#include "conepack/instance_gen.hpp"
#include "conepack/verify.hpp"
#include "test_util.hpp"

using namespace conepack;
using test::gen;
using test::s3;
using test::t1;

namespace {

ApproxParams params_for(const PackingInstance& instance, const Rational& eps) {
  return ApproxParams::make(eps, instance.rows());
}

// Separation wrapper that re-evaluates every certificate it hands out;
// the exact inequality d^T x < 0 is the Case-1 derivation.
class AuditingOracle : public ConeOracle {
 public:
  explicit AuditingOracle(OraclePtr base) : base_(std::move(base)) {}
  OracleLevel level() const override { return base_->level(); }
  int dimension() const override { return base_->dimension(); }
  OracleReply<double> query(std::span<const double> d) const override { return base_->query(d); }
  OracleReply<Rational> query_exact(const std::vector<Rational>& d) const override {
    OracleReply<Rational> reply = base_->query_exact(d);
    if (reply.generator) {
      REQUIRE(reply.generator->dot(d) == reply.cost);
      if (sgn(reply.cost) < 0) ++negative_certificates_;
    }
    return reply;
  }
  long negative_certificates() const { return negative_certificates_; }

 private:
  OraclePtr base_;
  mutable long negative_certificates_ = 0;
};

}  // namespace

TEST_CASE("step_size worked examples") {
  PackingInstance identity = t1();
  StepSize unit = step_size(identity, gen({1, 1}));
  CHECK(unit.nu == doctest::Approx(1.0));
  CHECK(unit.row_loads.size() == 2);

  // b = (6,4), r = (2,0): row 1 ignored
  PackingInstance two = new_instance(2, 2, {{0, 0, Rational(2)}, {1, 1, Rational(1)}},
                                     {Rational(6), Rational(4)}, {1, 1});
  StepSize skip = step_size(two, gen({1, 0}));
  CHECK(skip.nu == doctest::Approx(3.0));
  CHECK(skip.row_loads.size() == 1);
  CHECK(skip.row_loads[0].first == 0);

  // b = (1,1), r = (4,1)
  PackingInstance four = new_instance(2, 2, {{0, 0, Rational(4)}, {1, 1, Rational(1)}},
                                      {Rational(1), Rational(1)}, {1, 1});
  StepSize quarter = step_size(four, gen({1, 1}));
  CHECK(quarter.nu == doctest::Approx(0.25));
}

TEST_CASE("augment multiplies loaded rows and leaves others untouched") {
  PackingInstance instance = t1();
  ApproxParams params;
  params.epsilon = 1;
  params.epsilon_prime = Rational(1, 2);
  params.num_rows = 2;
  params.delta = 1.0 / 6.0;

  DualState state = init_duals(instance, params);
  Generator g = gen({1, 1});
  StepSize step = step_size(instance, g);
  augment(state, instance, params, g, step);
  // factor 1 + (1/2)*1*1/1 = 3/2 on both rows
  CHECK(state.y[0] == doctest::Approx(0.25));
  CHECK(state.y[1] == doctest::Approx(0.25));
  CHECK(state.raw_primal[0] == doctest::Approx(1.0));
  CHECK(state.iterations == 1);

  // row with r_i = 0 stays untouched; the bottleneck row gets 1 + eps'
  DualState partial = init_duals(instance, params);
  Generator left = gen({1, 0});
  StepSize lstep = step_size(instance, left);
  augment(partial, instance, params, left, lstep);
  CHECK(partial.y[1] == doctest::Approx(1.0 / 6.0));
  CHECK(partial.y[0] == doctest::Approx((1.0 / 6.0) * 1.5));
}

TEST_CASE("run_uniform reaches (1-eps) OPT on the identity instance") {
  PackingInstance instance = t1();
  EngineConfig config;
  config.params = params_for(instance, Rational(1, 5));
  std::vector<Generator> axes{gen({1, 0}), gen({0, 1})};
  ExplicitSetOracle oracle(2, axes);

  double last_dual = 0.0;
  config.on_augment = [&](const DualState& state) {
    for (double aj : state.a) CHECK(aj > 0.0);
    CHECK(state.dual_value > last_dual);
    last_dual = state.dual_value;
  };
  RunResult result = run_uniform(instance, config, oracle, Rational(1));
  CHECK(result.solution.feasible);
  CHECK(result.solution.objective >= 1.6);
  CHECK(last_dual >= 1.0);  // stopping rule
  CHECK(check_feasible(instance, result.solution.x).feasible);

  // iteration bound
  CHECK(result.log.augment_steps <=
        augment_step_bound(config.params) + config.params.num_rows);
}

TEST_CASE("run_uniform on a single-row instance") {
  PackingInstance instance = new_instance(1, 1, {{0, 0, Rational(1)}}, {Rational(1)}, {Rational(1)});
  EngineConfig config;
  config.params = params_for(instance, Rational(1, 10));
  ExplicitSetOracle oracle(1, {gen({1})});
  RunResult result = run_uniform(instance, config, oracle, Rational(1));
  CHECK(result.solution.objective >= 0.9);
  CHECK(result.solution.objective <= 1.0 + 1e-12);
}

TEST_CASE("run_uniform rejects certificates with the wrong cost") {
  PackingInstance instance = t1();
  EngineConfig config;
  config.params = params_for(instance, Rational(1, 5));
  ExplicitSetOracle oracle(2, {gen({2, 0})});
  CHECK_THROWS_AS(run_uniform(instance, config, oracle, Rational(1)), SolverError);
}

TEST_CASE("iteration cap is an error, not truncation") {
  PackingInstance instance = t1();
  EngineConfig config;
  config.params = params_for(instance, Rational(1, 5));
  config.max_iterations = 1;
  ExplicitSetOracle oracle(2, {gen({1, 0}), gen({0, 1})});
  CHECK_THROWS_AS(run_uniform(instance, config, oracle, Rational(1)), SolverError);
}

TEST_CASE("scale_to_feasible worked values") {
  PackingInstance instance = t1();
  ApproxParams params;
  params.epsilon = 1;
  params.epsilon_prime = Rational(1, 2);
  params.num_rows = 2;
  params.delta = 1.0 / 6.0;
  CHECK(final_scale_factor(params) == doctest::Approx(std::log(9.0) / std::log(1.5)));

  Solution zero = scale_to_feasible(instance, {0.0, 0.0}, params);
  CHECK(zero.feasible);
  CHECK(zero.objective == 0.0);
}

TEST_CASE("run_general approximates the explicit optimum") {
  PackingInstance instance = t1();
  auto base = std::make_shared<ExplicitSetOracle>(2, s3());
  auto separation = std::make_shared<AuditingOracle>(sign_as_separation(minimizing_as_sign(base)));

  EngineConfig config;
  config.params = params_for(instance, Rational(1, 5));
  std::vector<Generator> generators = s3();
  config.lambda_auditor = [&](std::span<const double> a) {
    std::vector<Rational> aq;
    for (double v : a) aq.push_back(rational_of(v));
    return brute_force_ratio(generators, aq, instance.costs()).lambda_star;
  };

  InitialBound bound = find_initial_bound(instance, config.params, *separation);
  RunResult result = run_general(instance, config, *separation, bound.lambda_exact);
  CHECK(result.solution.feasible);
  CHECK(result.solution.objective >= 1.6);  // OPT = 2 via exact simplex
  CHECK(separation->negative_certificates() > 0);
  CHECK(check_feasible(instance, result.solution.x).feasible);

  SimplexResult opt = exact_simplex(build_explicit_lp(instance, s3()));
  CHECK(opt.value == Rational(2));

  // lambda trace is non-decreasing
  double last = result.log.lambda_lower_initial;
  for (const SolveStep& step : result.log.steps) {
    if (step.kind == SolveStep::Kind::BoundRaise) {
      CHECK(step.lambda_lower >= last);
      last = step.lambda_lower;
    }
  }
  CHECK(result.log.bound_raises <= bound_raise_bound(config.params));
}

TEST_CASE("run_general returns zero when no generator has positive cost") {
  PackingInstance instance = t1({Rational(-1), Rational(-2)});
  auto base = std::make_shared<ExplicitSetOracle>(2, s3());
  OraclePtr separation = sign_as_separation(minimizing_as_sign(base));
  EngineConfig config;
  config.params = params_for(instance, Rational(1, 5));
  RunResult result = run_general(instance, config, *separation, Rational(1));
  CHECK(result.solution.objective == 0.0);
  CHECK(result.solution.feasible);
  CHECK_FALSE(result.note.empty());
}

TEST_CASE("run_general stops at the raise cap when costs are zero on S") {
  // costs positive on a column no generator touches: the loop can only
  // raise the bound until the cap, then returns the zero solution
  PackingInstance instance = t1({Rational(1), Rational(0)});
  auto base = std::make_shared<ExplicitSetOracle>(2, std::vector<Generator>{gen({0, 1})});
  OraclePtr separation = sign_as_separation(minimizing_as_sign(base));
  EngineConfig config;
  config.params = params_for(instance, Rational(1, 2));
  RunResult result = run_general(instance, config, *separation, Rational(1, 1000));
  CHECK(result.solution.objective == 0.0);
  CHECK(result.log.bound_raises <= bound_raise_bound(config.params));
  CHECK(result.log.augment_steps == 0);
}

TEST_CASE("general loop keeps lambda a lower bound on random instances") {
  Rng rng(31);
  for (int round = 0; round < 25; ++round) {
    ExplicitGenOptions options;
    options.ensure_positive_cost = true;
    options.integral_b = true;
    options.integral_c = true;
    options.unit_generators = true;
    ExplicitInstance sample = random_explicit_instance(rng, options);
    auto base = std::make_shared<ExplicitSetOracle>(sample.instance.cols(), sample.generators);
    OraclePtr separation = sign_as_separation(minimizing_as_sign(base));

    EngineConfig config;
    config.params = params_for(sample.instance, Rational(1, 4));
    config.lambda_auditor = [&](std::span<const double> a) {
      std::vector<Rational> aq;
      for (double v : a) aq.push_back(rational_of(v));
      return brute_force_ratio(sample.generators, aq, sample.instance.costs()).lambda_star;
    };
    InitialBound bound = find_initial_bound(sample.instance, config.params, *separation);
    RunResult result = run_general(sample.instance, config, *separation, bound.lambda_exact);
    CHECK(result.solution.feasible);  // BoundNotLower would have thrown
    CHECK(check_feasible(sample.instance, result.solution.x).feasible);
  }
}
