#include "conepack/bound_search.hpp"

#include <algorithm>

namespace conepack {

namespace {

Integer magnitude(const Rational& q) {
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  return std::max(num, den);
}

// Exponent of the candidate grid: floor(m/eps), at least 1, with base
// max(m, 2).  For m >= 2 the step m^floor(m/eps) stays below m^(m/eps),
// which is what the output contract needs.
Rational grid_ratio(const ApproxParams& params) {
  const long m = params.num_rows;
  Integer exponent_q;
  // floor(m / eps) = floor(m * den / num) for eps = num/den.
  Integer numerator = Integer(m) * params.epsilon.get_den();
  mpz_fdiv_q(exponent_q.get_mpz_t(), numerator.get_mpz_t(), params.epsilon.get_num().get_mpz_t());
  unsigned long exponent = 4096;  // cap keeps candidate powers manageable
  if (exponent_q <= 4096) exponent = std::max(1ul, exponent_q.get_ui());
  Integer base(std::max(m, 2l));
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), exponent);
  return Rational(power);
}

}  // namespace

Integer compute_M(const PackingInstance& instance) {
  Integer result = std::max<long>(instance.rows(), instance.cols());
  for (const Rational& b : instance.capacities()) result = std::max(result, magnitude(b));
  for (const Rational& c : instance.costs()) result = std::max(result, magnitude(c));
  for (const Triple& t : instance.triples()) result = std::max(result, magnitude(t.value));
  return result;
}

BoundBracket make_bracket(const PackingInstance& instance, const ApproxParams& params) {
  BoundBracket bracket;
  bracket.big_m = compute_M(instance);
  Rational m_cubed(bracket.big_m * bracket.big_m * bracket.big_m);
  Rational delta = rational_of(params.delta);
  bracket.lambda_lo = delta / m_cubed;
  bracket.lambda_hi = delta * m_cubed;
  bracket.grid_ratio = grid_ratio(params);
  // Count candidates lambda_lo * ratio^k inside [lambda_lo, lambda_hi].
  Rational candidate = bracket.lambda_lo;
  long count = 1;
  while (candidate * bracket.grid_ratio <= bracket.lambda_hi && count < 100000) {
    candidate *= bracket.grid_ratio;
    ++count;
  }
  bracket.exponent_range = count;
  return bracket;
}

std::vector<Rational> initial_reduced_costs(const PackingInstance& instance,
                                            const ApproxParams& params) {
  Rational delta = rational_of(params.delta);
  std::vector<Rational> y;
  y.reserve(instance.rows());
  for (const Rational& b : instance.capacities()) y.push_back(delta / b);
  return compute_reduced_costs_exact(instance, y);
}

InitialBound find_initial_bound(const PackingInstance& instance, const ApproxParams& params,
                                const ConeOracle& oracle) {
  InitialBound result;
  result.bracket = make_bracket(instance, params);
  const std::vector<Rational> a0 = initial_reduced_costs(instance, params);

  std::vector<Rational> d(instance.cols());
  // Probe verdict: true when lambda is still a valid lower bound, i.e. the
  // separation call reports no vector with negative cost.
  auto passes = [&](const Rational& lambda) {
    for (int j = 0; j < instance.cols(); ++j) {
      d[j] = a0[j] - lambda * instance.costs()[j];
    }
    OracleReply<Rational> reply = oracle.query_exact(d);
    ++result.probes;
    if (reply.generator && sgn(reply.cost) < 0) return false;
    return true;
  };

  auto candidate_at = [&](long k) {
    Rational value = result.bracket.lambda_lo;
    for (long i = 0; i < k; ++i) value *= result.bracket.grid_ratio;
    return value;
  };

  if (!passes(result.bracket.lambda_lo)) {
    fail(Errc::BoundBelowRange, "even lambda_1 = delta/M^3 is above lambda*");
  }
  long lo = 0;
  long hi = result.bracket.exponent_range - 1;
  while (lo < hi) {
    const long mid = lo + (hi - lo + 1) / 2;
    if (passes(candidate_at(mid))) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  result.lambda_exact = candidate_at(lo);
  result.lambda = double_below(result.lambda_exact);
  return result;
}

}  // namespace conepack
