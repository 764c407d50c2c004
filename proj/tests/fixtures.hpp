#pragma once

#include "wdcat/objective.hpp"
#include "wdcat/problems/quadratic.hpp"
#include "wdcat/regularizers.hpp"

#include <memory>

namespace fixtures {

using wdcat::Index;
using wdcat::Matrix;
using wdcat::Vector;

inline std::shared_ptr<const wdcat::Regularizer> no_reg() {
  return std::make_shared<wdcat::ZeroRegularizer>();
}

/// f(x) = 1/2 x'Qx + b'x (one component) plus psi, with Lipschitz estimate L.
inline wdcat::CompositeObjective quadratic(const Matrix& q, const Vector& b,
                                           std::shared_ptr<const wdcat::Regularizer> reg,
                                           double lipschitz) {
  auto smooth = std::make_shared<wdcat::QuadraticProblem>(q, Matrix(b));
  return wdcat::CompositeObjective(smooth, std::move(reg), lipschitz);
}

/// 1-D f(x) = (c/2) x^2.
inline wdcat::CompositeObjective scalar(double c, std::shared_ptr<const wdcat::Regularizer> reg,
                                        double lipschitz) {
  return quadratic(Matrix::Constant(1, 1, c), Vector::Zero(1), std::move(reg), lipschitz);
}

/// f_i(x) = 1/2 (a_i'x - b_i)^2 with a_i the columns of A.
class LeastSquares final : public wdcat::SmoothFiniteSum {
 public:
  LeastSquares(Matrix a, Vector b) : a_(std::move(a)), b_(std::move(b)) {}
  Index dimension() const override { return a_.rows(); }
  Index size() const override { return a_.cols(); }
  double component_value(Index i, const Vector& x) const override {
    const double r = a_.col(i).dot(x) - b_(i);
    return 0.5 * r * r;
  }
  void component_gradient(Index i, const Vector& x, Vector& grad) const override {
    grad = (a_.col(i).dot(x) - b_(i)) * a_.col(i);
  }
  double lipschitz() const { return a_.colwise().squaredNorm().maxCoeff(); }
  const Matrix& a() const { return a_; }
  const Vector& b() const { return b_; }

 private:
  Matrix a_;
  Vector b_;
};

inline Vector vec(std::initializer_list<double> values) {
  Vector v(static_cast<Index>(values.size()));
  Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

}  // namespace fixtures
