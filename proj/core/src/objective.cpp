#include "wdcat/objective.hpp"

#include <utility>

namespace wdcat {

double SmoothFiniteSum::value(const Vector& x) const {
  const Index n = size();
  double sum = 0.0;
  for (Index i = 0; i < n; ++i) sum += component_value(i, x);
  return sum / static_cast<double>(n);
}

void SmoothFiniteSum::gradient(const Vector& x, Vector& grad) const {
  const Index n = size();
  grad.setZero(dimension());
  Vector gi(dimension());
  for (Index i = 0; i < n; ++i) {
    component_gradient(i, x, gi);
    grad += gi;
  }
  grad /= static_cast<double>(n);
}

CompositeObjective::CompositeObjective(std::shared_ptr<const SmoothFiniteSum> smooth,
                                       std::shared_ptr<const Regularizer> regularizer,
                                       double lipschitz, std::optional<double> weak_convexity)
    : smooth_(std::move(smooth)),
      regularizer_(std::move(regularizer)),
      lipschitz_(lipschitz),
      weak_convexity_(weak_convexity) {
  if (!smooth_ || !regularizer_) throw Error("CompositeObjective: null component");
  if (smooth_->dimension() <= 0 || smooth_->size() <= 0)
    throw Error("CompositeObjective: dimension and component count must be positive");
  if (!(lipschitz_ > 0.0)) throw Error("CompositeObjective: Lipschitz estimate must be positive");
  if (weak_convexity_ && *weak_convexity_ < 0.0)
    throw Error("CompositeObjective: weak-convexity constant must be non-negative");
}

double CompositeObjective::smooth_value(const Vector& x, EvalCounters& counters) const {
  counters.values += static_cast<std::uint64_t>(size());
  return smooth_->value(x);
}

void CompositeObjective::smooth_gradient(const Vector& x, Vector& grad,
                                         EvalCounters& counters) const {
  counters.gradients += static_cast<std::uint64_t>(size());
  smooth_->gradient(x, grad);
}

void CompositeObjective::component_gradient(Index i, const Vector& x, Vector& grad,
                                            EvalCounters& counters) const {
  ++counters.gradients;
  smooth_->component_gradient(i, x, grad);
}

void CompositeObjective::prox(const Vector& v, double step, Vector& out,
                              EvalCounters& counters) const {
  ++counters.prox;
  regularizer_->prox(v, step, out);
}

double evaluate(const CompositeObjective& obj, const Vector& x, EvalCounters& counters) {
  if (x.size() != obj.dimension()) throw Error("evaluate: dimension mismatch");
  return obj.smooth_value(x, counters) + obj.regularizer().value(x);
}

double evaluate(const CompositeObjective& obj, const Vector& x) {
  EvalCounters scratch;
  return evaluate(obj, x, scratch);
}

}  // namespace wdcat
