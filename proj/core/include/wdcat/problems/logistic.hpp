#pragma once

#include "wdcat/data/dataset.hpp"
#include "wdcat/objective.hpp"

#include <Eigen/SparseCore>

namespace wdcat {

/// log(1 + e^u) without overflow.
double log1pexp(double u);
/// 1 / (1 + e^{-u}) without overflow.
double sigmoid(double u);

/// f_i(x) = log(1 + exp(-b_i a_i^T x)) + (l2/2) ||x||^2.
class LogisticProblem final : public SmoothFiniteSum {
 public:
  LogisticProblem(const Dataset& data, double l2);

  Index dimension() const override { return features_.cols(); }
  Index size() const override { return features_.rows(); }

  double component_value(Index i, const Vector& x) const override;
  void component_gradient(Index i, const Vector& x, Vector& grad) const override;
  double value(const Vector& x) const override;
  void gradient(const Vector& x, Vector& grad) const override;

  /// max_i ||a_i||^2 / 4 + l2: smoothness of every component.
  double lipschitz() const;
  double l2() const { return l2_; }
  const Eigen::SparseMatrix<double, Eigen::RowMajor>& features() const { return features_; }
  const Vector& labels() const { return labels_; }

 private:
  Eigen::SparseMatrix<double, Eigen::RowMajor> features_;
  Vector labels_;
  double l2_;
};

}  // namespace wdcat
