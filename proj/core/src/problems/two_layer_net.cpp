#include "wdcat/problems/two_layer_net.hpp"

#include "wdcat/problems/logistic.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace wdcat {

double softplus(double u) { return std::max(u, 0.0) + std::log1p(std::exp(-std::abs(u))); }

TwoLayerNetProblem::TwoLayerNetProblem(Matrix inputs, Vector labels, Index hidden)
    : inputs_(std::move(inputs)), labels_(std::move(labels)), hidden_(hidden) {
  if (inputs_.cols() < 1 || inputs_.rows() < 1) throw Error("TwoLayerNetProblem: empty data");
  if (labels_.size() != inputs_.cols()) throw Error("TwoLayerNetProblem: label count mismatch");
  if (hidden_ < 1) throw Error("TwoLayerNetProblem: hidden width must be positive");
}

TwoLayerNetProblem::TwoLayerNetProblem(const Dataset& data, Index hidden)
    : TwoLayerNetProblem(data.dense_columns(),
                         Eigen::Map<const Vector>(data.labels.data(), data.size()), hidden) {}

NetWeights TwoLayerNetProblem::unpack(const Vector& x) const {
  if (x.size() != dimension()) throw Error("TwoLayerNetProblem: variable size mismatch");
  const Index p = inputs_.rows();
  return {Eigen::Map<const Matrix>(x.data(), p, hidden_), x.tail(hidden_)};
}

Vector TwoLayerNetProblem::pack(const Matrix& w1, const Vector& w2) const {
  if (w1.rows() != inputs_.rows() || w1.cols() != hidden_ || w2.size() != hidden_)
    throw Error("TwoLayerNetProblem: weight shape mismatch");
  Vector x(dimension());
  x.head(w1.size()) = Eigen::Map<const Vector>(w1.data(), w1.size());
  x.tail(hidden_) = w2;
  return x;
}

double TwoLayerNetProblem::component_value(Index i, const Vector& x) const {
  const Index p = inputs_.rows();
  Eigen::Map<const Matrix> w1(x.data(), p, hidden_);
  const Vector pre = w1.transpose() * inputs_.col(i);
  double score = 0.0;
  for (Index j = 0; j < hidden_; ++j) score += x[p * hidden_ + j] * softplus(pre[j]);
  return log1pexp(-labels_[i] * score);
}

std::pair<Matrix, Vector> TwoLayerNetProblem::gradient_blocks(Index i, const Matrix& w1,
                                                              const Vector& w2) const {
  const Vector grad = [&] {
    Vector g;
    component_gradient(i, pack(w1, w2), g);
    return g;
  }();
  const Index p = inputs_.rows();
  return {Eigen::Map<const Matrix>(grad.data(), p, hidden_), grad.tail(hidden_)};
}

void TwoLayerNetProblem::component_gradient(Index i, const Vector& x, Vector& grad) const {
  const Index p = inputs_.rows();
  Eigen::Map<const Matrix> w1(x.data(), p, hidden_);
  const auto w2 = x.tail(hidden_);
  const auto a = inputs_.col(i);
  const Vector pre = w1.transpose() * a;
  Vector act(hidden_);
  Vector slope(hidden_);
  for (Index j = 0; j < hidden_; ++j) {
    act[j] = softplus(pre[j]);
    slope[j] = sigmoid(pre[j]);
  }
  const double score = w2.dot(act);
  const double b = labels_[i];
  // d/ds log(1 + e^{-b s})
  const double dloss = -b * sigmoid(-b * score);
  grad.resize(dimension());
  Eigen::Map<Matrix>(grad.data(), p, hidden_).noalias() =
      a * (dloss * w2.cwiseProduct(slope)).transpose();
  grad.tail(hidden_) = dloss * act;
}

Vector TwoLayerNetProblem::initial_weights(std::uint64_t seed) const {
  Rng rng(seed, 0x6e6e);
  const Index p = inputs_.rows();
  const double s1 = 1.0 / std::sqrt(static_cast<double>(p));
  const double s2 = 1.0 / std::sqrt(static_cast<double>(hidden_));
  Vector x(dimension());
  for (Index j = 0; j < p * hidden_; ++j) x[j] = rng.uniform(-s1, s1);
  for (Index j = 0; j < hidden_; ++j) x[p * hidden_ + j] = rng.uniform(-s2, s2);
  return x;
}

LayerLipschitz estimate_L_nn(const TwoLayerNetProblem& problem, std::uint64_t seed) {
  const Index p = problem.inputs_dim();
  const Index d = problem.hidden();
  WeightSampler sampler = [&](Rng& rng) {
    Vector x(problem.dimension());
    const double s1 = 1.0 / std::sqrt(static_cast<double>(p));
    const double s2 = 1.0 / std::sqrt(static_cast<double>(d));
    for (Index j = 0; j < p * d; ++j) x[j] = rng.uniform(-s1, s1);
    for (Index j = 0; j < d; ++j) x[p * d + j] = rng.uniform(-s2, s2);
    return x;
  };
  return estimate_L_nn(problem, seed, sampler);
}

LayerLipschitz estimate_L_nn(const TwoLayerNetProblem& problem, std::uint64_t seed,
                             const WeightSampler& sampler) {
  Rng rng(seed, 0x4c4c);
  LayerLipschitz out;
  constexpr int kMaxRedraws = 100;
  for (;;) {
    const NetWeights a = problem.unpack(sampler(rng));
    const NetWeights b = problem.unpack(sampler(rng));
    const double d1 = (a.w1 - b.w1).norm();
    const double d2 = (a.w2 - b.w2).norm();
    if (d1 == 0.0 || d2 == 0.0) {
      if (++out.redraws > kMaxRedraws) throw Error("estimate_L_nn: sampler keeps returning identical weights");
      continue;
    }
    const Vector base_x = problem.pack(a.w1, a.w2);
    const Vector first_x = problem.pack(b.w1, a.w2);
    const Vector second_x = problem.pack(a.w1, b.w2);
    Vector g0, g1, g2;
    for (Index i = 0; i < problem.size(); ++i) {
      problem.component_gradient(i, base_x, g0);
      problem.component_gradient(i, first_x, g1);
      problem.component_gradient(i, second_x, g2);
      out.first = std::max(out.first, (g0 - g1).norm() / d1);
      out.second = std::max(out.second, (g0 - g2).norm() / d2);
    }
    return out;
  }
}

}  // namespace wdcat
