#include "conepack/affine.hpp"

namespace conepack {

namespace {
thread_local ParametricContext* g_active_context = nullptr;
}

ParametricContext::ParametricContext(SearchInterval interval, SignDecider decider)
    : interval_(std::move(interval)), decider_(std::move(decider)) {
  if (interval_.lo >= interval_.hi) {
    fail(Errc::InvalidArgument, "empty search interval");
  }
  if (g_active_context != nullptr) {
    fail(Errc::Internal, "nested parametric simulations are not supported");
  }
  g_active_context = this;
}

ParametricContext::~ParametricContext() { g_active_context = nullptr; }

ParametricContext* ParametricContext::active() { return g_active_context; }

int ParametricContext::resolve_sign(const Rational& p, const Rational& q) {
  const int slope_sign = sgn(q);
  if (slope_sign == 0) return sgn(p);
  Rational crossing = -p / q;
  // g(lambda) = q * (lambda - crossing); lambda* lies in (lo, hi).
  if (crossing <= interval_.lo) return slope_sign;
  if (crossing >= interval_.hi) return -slope_sign;

  ++resolver_calls_;
  SignDecision decision = decider_(crossing, interval_);
  if (decision.sign == 0) {
    if (!decision.witness) {
      fail(Errc::Internal, "zero-sign decision without a witnessing generator");
    }
    throw FoundOptimum{crossing, *decision.witness};
  }
  if (decision.sign < 0) {
    interval_.hi = crossing;  // lambda* < crossing
  } else {
    interval_.lo = crossing;  // lambda* > crossing
  }
  if (on_shrink) on_shrink(interval_);
  return decision.sign < 0 ? -slope_sign : slope_sign;
}

int Affine::sign_at_optimum() const {
  ParametricContext* context = ParametricContext::active();
  if (context == nullptr) {
    fail(Errc::Internal, "affine comparison outside a parametric simulation");
  }
  context->count_comparison();
  return context->resolve_sign(p_, q_);
}

}  // namespace conepack
