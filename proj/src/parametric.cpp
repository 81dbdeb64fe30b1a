#include "conepack/parametric.hpp"

namespace conepack {

namespace {

std::vector<Rational> cost_vector(const std::vector<Rational>& a, const std::vector<Rational>& c,
                                  const Rational& lambda) {
  std::vector<Rational> d(a.size());
  for (size_t j = 0; j < a.size(); ++j) d[j] = a[j] - lambda * c[j];
  return d;
}

}  // namespace

SignDecision sign_decision(const std::vector<Rational>& a, const std::vector<Rational>& c,
                           const Rational& lambda, const ConeOracle& oracle) {
  if (sgn(lambda) <= 0) fail(Errc::NonPositiveLambda, "sign decisions need lambda > 0");
  OracleReply<Rational> reply = oracle.query_exact(cost_vector(a, c, lambda));
  if (!reply.generator) return {+1, std::nullopt};  // empty ground set: D > 0
  const int s = sgn(reply.cost);
  if (s == 0) return {0, reply.generator};
  return {s, std::nullopt};
}

SignDecider separation_as_sign(const std::vector<Rational>& a, const std::vector<Rational>& c,
                               const ConeOracle& oracle) {
  return [&a, &c, &oracle](const Rational& lambda, const SearchInterval& interval) -> SignDecision {
    if (sgn(lambda) <= 0) fail(Errc::NonPositiveLambda, "sign decisions need lambda > 0");
    OracleReply<Rational> reply = oracle.query_exact(cost_vector(a, c, lambda));
    if (reply.generator && sgn(reply.cost) < 0) return {-1, std::nullopt};
    // No violation at lambda, so lambda <= lambda*.  Distinguish equality by
    // probing slightly to the right: with exact rationals the halving stops
    // once delta undercuts the gap to the nearest generator root above
    // lambda (Lemma 5's closed-form delta would be astronomically small).
    Rational width = interval.hi - interval.lo;
    Rational delta = std::max(Rational(1), width) / 2;
    const std::vector<Rational> d_at_lambda = cost_vector(a, c, lambda);
    while (true) {
      OracleReply<Rational> probe = oracle.query_exact(cost_vector(a, c, lambda + delta));
      if (!probe.generator || sgn(probe.cost) >= 0) {
        return {+1, std::nullopt};  // lambda* >= lambda + delta > lambda
      }
      Rational cost_at_lambda = probe.generator->dot(d_at_lambda);
      if (sgn(cost_at_lambda) == 0) {
        return {0, probe.generator};
      }
      delta /= 2;
    }
  };
}

SignDecider make_sign_decider(const std::vector<Rational>& a, const std::vector<Rational>& c,
                              const ConeOracle& oracle) {
  if (oracle.level() == OracleLevel::Separation) {
    return separation_as_sign(a, c, oracle);
  }
  return [&a, &c, &oracle](const Rational& lambda, const SearchInterval&) {
    return sign_decision(a, c, lambda, oracle);
  };
}

MostViolated most_violated(const std::vector<Rational>& a, const std::vector<Rational>& c,
                           const ConeOracle& oracle, const Rational& lambda_cap,
                           std::function<void(const SearchInterval&)> on_shrink) {
  if (a.size() != c.size()) fail(Errc::InvalidArgument, "cost vectors disagree in length");
  for (const Rational& value : a) {
    if (sgn(value) <= 0) fail(Errc::InvalidArgument, "reduced costs must be strictly positive");
  }
  if (sgn(lambda_cap) <= 0) fail(Errc::InvalidArgument, "lambda cap must be positive");

  int probe_calls = 0;
  SignDecider base = make_sign_decider(a, c, oracle);
  SignDecider counting = [&](const Rational& lambda, const SearchInterval& interval) {
    ++probe_calls;
    return base(lambda, interval);
  };

  // Every generator root lies at or below the cap, so a Positive verdict
  // there leaves no candidate with positive cost.
  {
    SearchInterval full{Rational(0), lambda_cap * 2};
    SignDecision at_cap = counting(lambda_cap, full);
    if (at_cap.sign > 0) {
      fail(Errc::NoPositiveCostGenerator, "no generator with positive cost below the cap");
    }
    if (at_cap.sign == 0) {
      return {lambda_cap, *at_cap.witness, 0, 0, probe_calls};
    }
  }

  ParametricContext context(SearchInterval{Rational(0), lambda_cap}, counting);
  context.on_shrink = std::move(on_shrink);

  std::vector<Affine> d(a.size());
  for (size_t j = 0; j < a.size(); ++j) d[j] = Affine(a[j], -c[j]);

  try {
    std::optional<Generator> answer = oracle.query_parametric(d);
    if (!answer) {
      // A separation simulation cannot finish with AllNonNegative while
      // lambda* sits strictly inside the interval.
      fail(Errc::Internal, "parametric simulation ended without a witness");
    }
    // The simulated answer is the oracle's output for every lambda in the
    // final interval, in particular at lambda*, where its cost is zero.
    Rational cost_c = answer->dot(c);
    if (sgn(cost_c) <= 0) {
      fail(Errc::Internal, "parametric witness has non-positive objective cost");
    }
    Rational lambda_star = answer->dot(a) / cost_c;
    if (lambda_star < context.interval().lo || lambda_star > context.interval().hi) {
      fail(Errc::Internal, "parametric witness root escaped the search interval");
    }
    return {std::move(lambda_star), std::move(*answer), context.resolver_calls(),
            context.comparisons(), probe_calls};
  } catch (const FoundOptimum& found) {
    return {found.lambda, found.witness, context.resolver_calls(), context.comparisons(),
            probe_calls};
  }
}

}  // namespace conepack
