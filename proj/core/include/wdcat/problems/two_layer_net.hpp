#pragma once

#include "wdcat/data/dataset.hpp"
#include "wdcat/objective.hpp"
#include "wdcat/rng.hpp"

#include <functional>
#include <utility>

namespace wdcat {

/// sigma(u) = log(1 + e^u), evaluated as max(u,0) + log1p(e^{-|u|}).
double softplus(double u);

struct NetWeights {
  Matrix w1;  // p x d
  Vector w2;  // d
};

/// Binary classifier b ~ sign(W2^T sigma(W1^T a)) fitted with the logistic
/// loss l(b, s) = log(1 + e^{-b s}). The variable is [vec(W1); W2].
class TwoLayerNetProblem final : public SmoothFiniteSum {
 public:
  /// `inputs` is p x n (one sample per column), labels in {-1, +1}.
  TwoLayerNetProblem(Matrix inputs, Vector labels, Index hidden);
  TwoLayerNetProblem(const Dataset& data, Index hidden);

  Index dimension() const override { return inputs_.rows() * hidden_ + hidden_; }
  Index size() const override { return inputs_.cols(); }

  double component_value(Index i, const Vector& x) const override;
  void component_gradient(Index i, const Vector& x, Vector& grad) const override;

  /// Gradient of sample i's loss with respect to (W1, W2).
  std::pair<Matrix, Vector> gradient_blocks(Index i, const Matrix& w1, const Vector& w2) const;

  NetWeights unpack(const Vector& x) const;
  Vector pack(const Matrix& w1, const Vector& w2) const;

  /// Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) per layer.
  Vector initial_weights(std::uint64_t seed) const;

  Index inputs_dim() const { return inputs_.rows(); }
  Index hidden() const { return hidden_; }

 private:
  Matrix inputs_;
  Vector labels_;
  Index hidden_;
};

/// Per-layer Lipschitz estimates (L1, L2) from two random weight draws.
struct LayerLipschitz {
  double first = 0.0;
  double second = 0.0;
  int redraws = 0;
};

using WeightSampler = std::function<Vector(Rng&)>;

LayerLipschitz estimate_L_nn(const TwoLayerNetProblem& problem, std::uint64_t seed);
/// Same estimate with a caller-supplied sampler; identical draws are redrawn
/// up to 100 times before giving up.
LayerLipschitz estimate_L_nn(const TwoLayerNetProblem& problem, std::uint64_t seed,
                             const WeightSampler& sampler);

}  // namespace wdcat
