#pragma once

#include "wdcat/objective.hpp"

namespace wdcat {

/// f(x) = (1/n) sum_i (1/2 x^T Q x + b_i^T x) with a shared symmetric Q.
///
/// All components share Q, so each is L-smooth with L = max |eig(Q)| and
/// the sum is rho-weakly convex with rho = max(0, -min eig(Q)).
class QuadraticProblem final : public SmoothFiniteSum {
 public:
  /// `linear_terms` is p x n; column i is b_i.
  QuadraticProblem(Matrix hessian, Matrix linear_terms);

  Index dimension() const override { return hessian_.rows(); }
  Index size() const override { return linear_terms_.cols(); }

  double component_value(Index i, const Vector& x) const override;
  void component_gradient(Index i, const Vector& x, Vector& grad) const override;
  double value(const Vector& x) const override;
  void gradient(const Vector& x, Vector& grad) const override;

  const Matrix& hessian() const { return hessian_; }
  const Vector& linear() const { return mean_linear_; }
  const Vector& eigenvalues() const { return eigenvalues_; }
  double lipschitz() const { return lipschitz_; }
  double weak_convexity() const { return weak_convexity_; }

 private:
  Matrix hessian_;
  Matrix linear_terms_;
  Vector mean_linear_;
  Vector eigenvalues_;
  double lipschitz_;
  double weak_convexity_;
};

}  // namespace wdcat
