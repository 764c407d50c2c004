#include "wdcat/problems/logistic.hpp"

#include <cmath>

namespace wdcat {

double log1pexp(double u) {
  return u > 0.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u));
}

double sigmoid(double u) {
  if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

LogisticProblem::LogisticProblem(const Dataset& data, double l2)
    : features_(data.matrix()), labels_(data.size()), l2_(l2) {
  if (data.size() == 0) throw Error("LogisticProblem: empty dataset");
  if (l2 < 0.0) throw Error("LogisticProblem: l2 must be non-negative");
  for (Index i = 0; i < data.size(); ++i) labels_[i] = data.labels[static_cast<std::size_t>(i)];
}

double LogisticProblem::component_value(Index i, const Vector& x) const {
  const double margin = labels_[i] * features_.row(i).dot(x);
  return log1pexp(-margin) + 0.5 * l2_ * x.squaredNorm();
}

void LogisticProblem::component_gradient(Index i, const Vector& x, Vector& grad) const {
  const double margin = labels_[i] * features_.row(i).dot(x);
  const double scale = -labels_[i] * sigmoid(-margin);
  grad = l2_ * x;
  for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(features_, i); it; ++it)
    grad[it.col()] += scale * it.value();
}

double LogisticProblem::value(const Vector& x) const {
  const Vector margins = labels_.cwiseProduct(features_ * x);
  double sum = 0.0;
  for (Index i = 0; i < margins.size(); ++i) sum += log1pexp(-margins[i]);
  return sum / static_cast<double>(size()) + 0.5 * l2_ * x.squaredNorm();
}

void LogisticProblem::gradient(const Vector& x, Vector& grad) const {
  const Vector margins = labels_.cwiseProduct(features_ * x);
  Vector weights(margins.size());
  for (Index i = 0; i < margins.size(); ++i) weights[i] = -labels_[i] * sigmoid(-margins[i]);
  grad = features_.transpose() * weights;
  grad /= static_cast<double>(size());
  grad += l2_ * x;
}

double LogisticProblem::lipschitz() const {
  double max_sq = 0.0;
  for (Index i = 0; i < features_.rows(); ++i)
    max_sq = std::max(max_sq, features_.row(i).squaredNorm());
  return 0.25 * max_sq + l2_;
}

}  // namespace wdcat
