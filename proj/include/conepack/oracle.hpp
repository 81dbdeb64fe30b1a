#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "conepack/affine.hpp"
#include "conepack/instance.hpp"
#include "conepack/rational.hpp"

namespace conepack {

// Decreasing strength: a minimizing oracle returns the true minimizer, a
// sign oracle a vector whose cost sign matches the minimum's, a separation
// oracle only a negative-cost certificate or "all non-negative".
enum class OracleLevel { Minimizing, Sign, Separation };

// generator == nullopt encodes the AllNonNegative verdict (separation level)
// or an empty ground set seen from a sign oracle; cost is then meaningless
// apart from being >= 0.
template <class T>
struct OracleReply {
  std::optional<Generator> generator;
  T cost{};
};

struct CostModel {
  bool uniform = false;
  Rational uniform_cost;  // c-hat, > 0 when uniform
};

class ConeOracle {
 public:
  virtual ~ConeOracle() = default;

  virtual OracleLevel level() const = 0;
  virtual int dimension() const = 0;
  virtual CostModel cost_model() const { return {}; }

  // Float entry point used by the Garg-Koenemann loop.
  virtual OracleReply<double> query(std::span<const double> d) const = 0;
  // Exact entry point used by bound search and parametric probes.
  virtual OracleReply<Rational> query_exact(const std::vector<Rational>& d) const = 0;
  // Runs the oracle's own algorithm on linear parametric costs.  Returns the
  // answer generator (nullopt = AllNonNegative for separation level).
  virtual std::optional<Generator> query_parametric(const std::vector<Affine>& d) const {
    fail(Errc::NonCombinatorialOperation, "oracle does not support parametric simulation");
  }
};

using OraclePtr = std::shared_ptr<const ConeOracle>;

// The ground set S given explicitly; minimizing oracle used as test ground
// truth everywhere.
class ExplicitSetOracle : public ConeOracle {
 public:
  ExplicitSetOracle(int dimension, std::vector<Generator> generators);

  OracleLevel level() const override { return OracleLevel::Minimizing; }
  int dimension() const override { return dimension_; }
  const std::vector<Generator>& generators() const { return generators_; }

  OracleReply<double> query(std::span<const double> d) const override;
  OracleReply<Rational> query_exact(const std::vector<Rational>& d) const override;
  std::optional<Generator> query_parametric(const std::vector<Affine>& d) const override;

 private:
  template <class T, class View>
  OracleReply<T> solve(const View& d) const;

  int dimension_ = 0;
  std::vector<Generator> generators_;
};

// Wrappers realizing the strength ordering minimizing > sign > separation.
OraclePtr minimizing_as_sign(OraclePtr oracle);
OraclePtr sign_as_separation(OraclePtr oracle);

// Scales a generator so its maximum entry is exactly 1.
Generator normalize_certificate(const Generator& generator);

}  // namespace conepack
