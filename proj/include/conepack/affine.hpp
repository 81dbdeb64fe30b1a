#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "conepack/errors.hpp"
#include "conepack/instance.hpp"
#include "conepack/rational.hpp"

namespace conepack {

// Open interval known to contain lambda*.
struct SearchInterval {
  Rational lo;
  Rational hi;
};

// Outcome of probing a candidate lambda': sign of D(lambda') relative to
// lambda*.  witness is present exactly in the Zero case.
struct SignDecision {
  int sign = 0;
  std::optional<Generator> witness;
};

using SignDecider = std::function<SignDecision(const Rational& lambda, const SearchInterval& interval)>;

// Thrown when a probe lands exactly on lambda*; unwinds the simulated
// oracle algorithm and carries the minimizing generator out.
struct FoundOptimum {
  Rational lambda;
  Generator witness;
};

// Resolves comparisons of affine values during a parametric simulation.
// Exactly one context may be active per thread; activation is scoped.
class ParametricContext {
 public:
  ParametricContext(SearchInterval interval, SignDecider decider);
  ~ParametricContext();
  ParametricContext(const ParametricContext&) = delete;
  ParametricContext& operator=(const ParametricContext&) = delete;

  // Sign of p + q*lambda at lambda = lambda*.  Shrinks the interval when a
  // probe is needed; throws FoundOptimum when the probe hits lambda*.
  int resolve_sign(const Rational& p, const Rational& q);

  const SearchInterval& interval() const { return interval_; }
  long resolver_calls() const { return resolver_calls_; }
  long comparisons() const { return comparisons_; }
  void count_comparison() { ++comparisons_; }

  std::function<void(const SearchInterval&)> on_shrink;

  static ParametricContext* active();

 private:
  SearchInterval interval_;
  SignDecider decider_;
  long resolver_calls_ = 0;
  long comparisons_ = 0;
};

// Linear parametric value p + q*lambda.  Closed under addition, subtraction
// and multiplication by constants; comparisons are routed through the active
// ParametricContext.
class Affine {
 public:
  Affine() : p_(0), q_(0) {}
  Affine(const Rational& constant) : p_(constant), q_(0) {}  // NOLINT(google-explicit-constructor)
  Affine(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

  const Rational& offset() const { return p_; }
  const Rational& slope() const { return q_; }
  bool is_constant() const { return sgn(q_) == 0; }
  Rational at(const Rational& lambda) const { return p_ + q_ * lambda; }

  Affine operator-() const { return Affine(-p_, -q_); }
  Affine& operator+=(const Affine& rhs) {
    p_ += rhs.p_;
    q_ += rhs.q_;
    return *this;
  }
  Affine& operator-=(const Affine& rhs) {
    p_ -= rhs.p_;
    q_ -= rhs.q_;
    return *this;
  }
  friend Affine operator+(Affine lhs, const Affine& rhs) { return lhs += rhs; }
  friend Affine operator-(Affine lhs, const Affine& rhs) { return lhs -= rhs; }

  friend Affine operator*(const Affine& lhs, const Affine& rhs) {
    if (!lhs.is_constant() && !rhs.is_constant()) {
      fail(Errc::NonCombinatorialOperation, "product of two parametric values");
    }
    if (rhs.is_constant()) return Affine(lhs.p_ * rhs.p_, lhs.q_ * rhs.p_);
    return Affine(rhs.p_ * lhs.p_, rhs.q_ * lhs.p_);
  }
  friend Affine operator*(const Rational& lhs, const Affine& rhs) {
    return Affine(lhs * rhs.p_, lhs * rhs.q_);
  }
  friend Affine operator*(const Affine& lhs, const Rational& rhs) { return rhs * lhs; }
  friend Affine operator/(const Affine& lhs, const Affine& rhs) {
    if (!rhs.is_constant()) {
      fail(Errc::NonCombinatorialOperation, "division by a parametric value");
    }
    if (sgn(rhs.p_) == 0) fail(Errc::InvalidArgument, "division by zero");
    return Affine(lhs.p_ / rhs.p_, lhs.q_ / rhs.p_);
  }
  friend Affine operator/(const Affine& lhs, const Rational& rhs) {
    if (sgn(rhs) == 0) fail(Errc::InvalidArgument, "division by zero");
    return Affine(lhs.p_ / rhs, lhs.q_ / rhs);
  }

  // Sign of this value at lambda*, via the active context.
  int sign_at_optimum() const;

  friend bool operator<(const Affine& lhs, const Affine& rhs) {
    return (lhs - rhs).sign_at_optimum() < 0;
  }
  friend bool operator>(const Affine& lhs, const Affine& rhs) { return rhs < lhs; }
  friend bool operator<=(const Affine& lhs, const Affine& rhs) {
    return (lhs - rhs).sign_at_optimum() <= 0;
  }
  friend bool operator>=(const Affine& lhs, const Affine& rhs) { return rhs <= lhs; }
  friend bool operator==(const Affine& lhs, const Affine& rhs) {
    return (lhs - rhs).sign_at_optimum() == 0;
  }
  friend bool operator!=(const Affine& lhs, const Affine& rhs) { return !(lhs == rhs); }

 private:
  Rational p_;
  Rational q_;
};

}  // namespace conepack
