#include "wdcat/problems/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace wdcat {

QuadraticProblem::QuadraticProblem(Matrix hessian, Matrix linear_terms)
    : hessian_(std::move(hessian)), linear_terms_(std::move(linear_terms)) {
  if (hessian_.rows() != hessian_.cols() || hessian_.rows() == 0)
    throw Error("QuadraticProblem: Q must be square and non-empty");
  if (linear_terms_.rows() != hessian_.rows() || linear_terms_.cols() < 1)
    throw Error("QuadraticProblem: linear terms must be p x n with n >= 1");
  const double asym = (hessian_ - hessian_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * std::max(1.0, hessian_.cwiseAbs().maxCoeff()))
    throw Error("QuadraticProblem: Q must be symmetric");
  hessian_ = 0.5 * (hessian_ + hessian_.transpose()).eval();
  mean_linear_ = linear_terms_.rowwise().mean();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hessian_, Eigen::EigenvaluesOnly);
  eigenvalues_ = solver.eigenvalues();
  lipschitz_ = eigenvalues_.cwiseAbs().maxCoeff();
  weak_convexity_ = std::max(0.0, -eigenvalues_.minCoeff());
}

double QuadraticProblem::component_value(Index i, const Vector& x) const {
  return 0.5 * x.dot(hessian_ * x) + linear_terms_.col(i).dot(x);
}

void QuadraticProblem::component_gradient(Index i, const Vector& x, Vector& grad) const {
  grad.noalias() = hessian_ * x;
  grad += linear_terms_.col(i);
}

double QuadraticProblem::value(const Vector& x) const {
  return 0.5 * x.dot(hessian_ * x) + mean_linear_.dot(x);
}

void QuadraticProblem::gradient(const Vector& x, Vector& grad) const {
  grad.noalias() = hessian_ * x;
  grad += mean_linear_;
}

}  // namespace wdcat
