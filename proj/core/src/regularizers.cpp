#include "wdcat/regularizers.hpp"

#include <cmath>
#include <limits>

namespace wdcat {

ElasticNetRegularizer::ElasticNetRegularizer(double mu, double lambda) : mu_(mu), lambda_(lambda) {
  if (mu < 0.0 || lambda < 0.0) throw Error("elastic net: mu and lambda must be non-negative");
}

double ElasticNetRegularizer::value(const Vector& x) const {
  return 0.5 * mu_ * x.squaredNorm() + lambda_ * x.lpNorm<1>();
}

void ElasticNetRegularizer::prox(const Vector& v, double step, Vector& out) const {
  out = elastic_net_prox(v, step, mu_, lambda_);
}

Vector elastic_net_prox(const Vector& v, double step, double mu, double lambda) {
  if (step < 0.0 || mu < 0.0 || lambda < 0.0)
    throw Error("elastic_net_prox: parameters must be non-negative");
  const double threshold = step * lambda;
  const double shrink = 1.0 / (1.0 + step * mu);
  Vector out(v.size());
  for (Index j = 0; j < v.size(); ++j) out[j] = soft_threshold(v[j], threshold) * shrink;
  return out;
}

ColumnBallIndicator::ColumnBallIndicator(Index rows, double radius) : rows_(rows), radius_(radius) {
  if (rows <= 0) throw Error("column ball: rows must be positive");
  if (!(radius > 0.0)) throw Error("column ball: radius must be positive");
}

double ColumnBallIndicator::value(const Vector& x) const {
  if (x.size() % rows_ != 0) throw Error("column ball: size is not a multiple of rows");
  const Index cols = x.size() / rows_;
  const double limit = radius_ * (1.0 + 1e-12);
  for (Index c = 0; c < cols; ++c) {
    if (x.segment(c * rows_, rows_).norm() > limit) return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

void ColumnBallIndicator::prox(const Vector& v, double, Vector& out) const {
  if (v.size() % rows_ != 0) throw Error("column ball: size is not a multiple of rows");
  out = v;
  const Index cols = v.size() / rows_;
  for (Index c = 0; c < cols; ++c) {
    auto col = out.segment(c * rows_, rows_);
    const double norm = col.norm();
    if (norm > radius_) col *= radius_ / norm;
  }
}

}  // namespace wdcat
