#pragma once

#include "wdcat/objective.hpp"

namespace wdcat {

inline double soft_threshold(double v, double t) {
  if (v > t) return v - t;
  if (v < -t) return v + t;
  return 0.0;
}

class ZeroRegularizer final : public Regularizer {
 public:
  double value(const Vector&) const override { return 0.0; }
  void prox(const Vector& v, double, Vector& out) const override { out = v; }
  bool is_zero() const override { return true; }
  std::string name() const override { return "zero"; }
};

/// psi(x) = (mu/2)||x||^2 + lambda ||x||_1. With mu = 0 this is the lasso
/// penalty, with lambda = 0 a ridge penalty.
class ElasticNetRegularizer final : public Regularizer {
 public:
  ElasticNetRegularizer(double mu, double lambda);

  double value(const Vector& x) const override;
  void prox(const Vector& v, double step, Vector& out) const override;
  bool is_zero() const override { return mu_ == 0.0 && lambda_ == 0.0; }
  std::string name() const override { return "elastic-net"; }

  double mu() const { return mu_; }
  double lambda() const { return lambda_; }

 private:
  double mu_;
  double lambda_;
};

/// Indicator of the set of vectors whose consecutive blocks of `rows`
/// entries (the columns of a column-major rows x k matrix) have l2 norm at
/// most `radius`. With rows == dimension this is the indicator of a ball.
class ColumnBallIndicator final : public Regularizer {
 public:
  explicit ColumnBallIndicator(Index rows, double radius = 1.0);

  double value(const Vector& x) const override;
  void prox(const Vector& v, double step, Vector& out) const override;
  std::string name() const override { return "column-ball"; }

  Index rows() const { return rows_; }
  double radius() const { return radius_; }

 private:
  Index rows_;
  double radius_;
};

/// Componentwise soft(v_j, step*lambda) / (1 + step*mu).
Vector elastic_net_prox(const Vector& v, double step, double mu, double lambda);

}  // namespace wdcat
