#include <doctest.h>

#include <cmath>

#include "conepack/bound_search.hpp"
#include "conepack/instance_gen.hpp"
#include "conepack/verify.hpp"
#include "test_util.hpp"

using namespace conepack;
using test::t1;

TEST_CASE("compute_M worked examples") {
  CHECK(compute_M(t1()) == 2);  // all data 1, n = m = 2

  PackingInstance second = new_instance(
      2, 2, {{0, 0, Rational(2)}, {0, 1, Rational(1)}, {1, 1, Rational(2)}},
      {Rational(7), Rational(1)}, {Rational(3), Rational(3)});
  CHECK(compute_M(second) == 7);

  // rationals contribute max(|num|, den)
  PackingInstance frac = new_instance(1, 1, {{0, 0, Rational(1, 9)}}, {Rational(1)}, {Rational(1)});
  CHECK(compute_M(frac) == 9);

  Rng rng(3);
  for (int round = 0; round < 20; ++round) {
    ExplicitInstance sample = random_explicit_instance(rng, {});
    Integer m = compute_M(sample.instance);
    CHECK(m >= sample.instance.rows());
    CHECK(m >= sample.instance.cols());
  }
}

TEST_CASE("bracket matches the T1 arithmetic") {
  PackingInstance instance = t1();
  ApproxParams params = ApproxParams::make(Rational(1, 2), 2);
  BoundBracket bracket = make_bracket(instance, params);
  Rational delta = rational_of(params.delta);
  CHECK(bracket.big_m == 2);
  CHECK(bracket.lambda_lo == delta / 8);
  CHECK(bracket.lambda_hi == delta * 8);
  // m^(m/eps) = 2^4 = 16; two grid steps cover the 64-wide bracket
  CHECK(bracket.grid_ratio == Rational(16));
  CHECK(bracket.exponent_range == 2);
  CHECK(bracket.grid_ratio * bracket.grid_ratio >= Rational(64));
}

TEST_CASE("initial bound contract against brute force") {
  Rng rng(17);
  int checked = 0;
  while (checked < 60) {
    ExplicitGenOptions options;
    options.max_rows = 6;
    options.max_cols = 6;
    options.max_generators = 10;
    options.integral_b = true;
    options.integral_c = true;
    options.unit_generators = true;
    options.ensure_positive_cost = true;
    ExplicitInstance sample = random_explicit_instance(rng, options);
    ApproxParams params = ApproxParams::make(Rational(1, 2), sample.instance.rows());
    auto base = std::make_shared<ExplicitSetOracle>(sample.instance.cols(), sample.generators);
    OraclePtr separation = sign_as_separation(minimizing_as_sign(base));

    InitialBound bound = find_initial_bound(sample.instance, params, *separation);
    std::vector<Rational> a0 = initial_reduced_costs(sample.instance, params);
    RatioResult truth = brute_force_ratio(sample.generators, a0, sample.instance.costs());

    // lower-bound side is unconditional
    CHECK(bound.lambda_exact <= truth.lambda_star);
    // bracket validity on integral-style data
    CHECK(bound.bracket.lambda_lo <= truth.lambda_star);
    CHECK(truth.lambda_star <= bound.bracket.lambda_hi);
    // output contract lambda* <= m^(m/eps) * lambda
    CHECK(truth.lambda_star <= bound.bracket.grid_ratio * bound.lambda_exact);

    // probe budget: ceil(log2(range)) + 3
    double range = std::max<double>(1.0, static_cast<double>(bound.bracket.exponent_range));
    CHECK(bound.probes <= static_cast<int>(std::ceil(std::log2(range))) + 3);
    ++checked;
  }
}

TEST_CASE("single candidate bracket returns lambda_1 in one probe") {
  // M small enough that the grid ratio overshoots the bracket width
  PackingInstance instance = t1();
  ApproxParams params = ApproxParams::make(Rational(1, 2), 2);
  auto base = std::make_shared<ExplicitSetOracle>(2, test::s3());
  OraclePtr separation = sign_as_separation(minimizing_as_sign(base));
  InitialBound bound = find_initial_bound(instance, params, *separation);
  CHECK(bound.lambda_exact >= bound.bracket.lambda_lo);
  CHECK(bound.probes <= 3);
}
