#include "conepack/oracle.hpp"

namespace conepack {

ExplicitSetOracle::ExplicitSetOracle(int dimension, std::vector<Generator> generators)
    : dimension_(dimension), generators_(std::move(generators)) {
  if (generators_.empty()) fail(Errc::InvalidArgument, "explicit set must be non-empty");
  for (const Generator& g : generators_) {
    if (g.max_index() >= dimension_) {
      fail(Errc::IndexOutOfRange, "generator index outside instance dimension");
    }
  }
}

template <class T, class View>
OracleReply<T> ExplicitSetOracle::solve(const View& d) const {
  int best = 0;
  T best_cost = generators_[0].dot_generic(d);
  for (size_t l = 1; l < generators_.size(); ++l) {
    T cost = generators_[l].dot_generic(d);
    if (cost < best_cost) {
      best_cost = std::move(cost);
      best = static_cast<int>(l);
    }
  }
  return {generators_[best], std::move(best_cost)};
}

OracleReply<double> ExplicitSetOracle::query(std::span<const double> d) const {
  std::vector<double> dense(d.begin(), d.end());
  return solve<double>(dense);
}

OracleReply<Rational> ExplicitSetOracle::query_exact(const std::vector<Rational>& d) const {
  return solve<Rational>(d);
}

std::optional<Generator> ExplicitSetOracle::query_parametric(const std::vector<Affine>& d) const {
  return solve<Affine>(d).generator;
}

namespace {

class SignAdapter : public ConeOracle {
 public:
  explicit SignAdapter(OraclePtr base) : base_(std::move(base)) {}
  OracleLevel level() const override { return OracleLevel::Sign; }
  int dimension() const override { return base_->dimension(); }
  CostModel cost_model() const override { return base_->cost_model(); }
  OracleReply<double> query(std::span<const double> d) const override { return base_->query(d); }
  OracleReply<Rational> query_exact(const std::vector<Rational>& d) const override {
    return base_->query_exact(d);
  }
  std::optional<Generator> query_parametric(const std::vector<Affine>& d) const override {
    return base_->query_parametric(d);
  }

 private:
  OraclePtr base_;
};

class SeparationAdapter : public ConeOracle {
 public:
  explicit SeparationAdapter(OraclePtr base) : base_(std::move(base)) {}
  OracleLevel level() const override { return OracleLevel::Separation; }
  int dimension() const override { return base_->dimension(); }
  CostModel cost_model() const override { return base_->cost_model(); }

  OracleReply<double> query(std::span<const double> d) const override {
    OracleReply<double> reply = base_->query(d);
    if (reply.generator && reply.cost < 0.0) return reply;
    return {std::nullopt, reply.generator ? reply.cost : 0.0};
  }
  OracleReply<Rational> query_exact(const std::vector<Rational>& d) const override {
    OracleReply<Rational> reply = base_->query_exact(d);
    if (reply.generator && sgn(reply.cost) < 0) return reply;
    return {std::nullopt, reply.generator ? reply.cost : Rational(0)};
  }
  std::optional<Generator> query_parametric(const std::vector<Affine>& d) const override {
    std::optional<Generator> g = base_->query_parametric(d);
    if (!g) return std::nullopt;
    Affine cost = g->dot_generic(d);
    if (cost < Affine(Rational(0))) return g;
    return std::nullopt;
  }

 private:
  OraclePtr base_;
};

}  // namespace

OraclePtr minimizing_as_sign(OraclePtr oracle) {
  if (oracle->level() != OracleLevel::Minimizing) {
    fail(Errc::InvalidArgument, "minimizing_as_sign requires a minimizing oracle");
  }
  return std::make_shared<SignAdapter>(std::move(oracle));
}

OraclePtr sign_as_separation(OraclePtr oracle) {
  if (oracle->level() == OracleLevel::Separation) {
    fail(Errc::InvalidArgument, "sign_as_separation requires a minimizing or sign oracle");
  }
  return std::make_shared<SeparationAdapter>(std::move(oracle));
}

Generator normalize_certificate(const Generator& generator) {
  Rational top = generator.max_entry();
  if (sgn(top) <= 0) fail(Errc::ZeroGenerator, "cannot normalize a zero generator");
  std::vector<std::pair<int, Rational>> scaled;
  scaled.reserve(generator.entries().size());
  for (const auto& [index, value] : generator.entries()) {
    scaled.emplace_back(index, value / top);
  }
  return Generator(std::move(scaled));
}

}  // namespace conepack
