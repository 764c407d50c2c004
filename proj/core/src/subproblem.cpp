#include "wdcat/subproblem.hpp"

#include <utility>

namespace wdcat {

ProxSubproblem::ProxSubproblem(const CompositeObjective& objective, Vector center, double kappa)
    : objective_(&objective), center_(std::move(center)), kappa_(kappa) {
  if (center_.size() != objective.dimension()) throw Error("ProxSubproblem: center dimension mismatch");
  if (!(kappa > 0.0)) throw Error("ProxSubproblem: kappa must be positive");
}

double ProxSubproblem::value(const Vector& x, EvalCounters& counters) const {
  return evaluate(*objective_, x, counters) + 0.5 * kappa_ * (x - center_).squaredNorm();
}

void ProxSubproblem::smooth_gradient(const Vector& x, Vector& grad, EvalCounters& counters) const {
  objective_->smooth_gradient(x, grad, counters);
  grad.noalias() += kappa_ * (x - center_);
}

double subproblem_evaluate(const ProxSubproblem& sub, const Vector& x, EvalCounters& counters) {
  return sub.value(x, counters);
}

double subproblem_evaluate(const ProxSubproblem& sub, const Vector& x) {
  EvalCounters scratch;
  return sub.value(x, scratch);
}

Vector prox_gradient_step(const ProxSubproblem& sub, double step, const Vector& x,
                          EvalCounters& counters) {
  if (!(step > 0.0)) throw Error("prox_gradient_step: step must be positive");
  Vector grad;
  sub.smooth_gradient(x, grad, counters);
  Vector out;
  sub.objective().prox(x - step * grad, step, out, counters);
  return out;
}

Vector prox_gradient_step(const CompositeObjective& obj, double step, const Vector& x,
                          EvalCounters& counters) {
  if (!(step > 0.0)) throw Error("prox_gradient_step: step must be positive");
  Vector grad;
  obj.smooth_gradient(x, grad, counters);
  Vector out;
  obj.prox(x - step * grad, step, out, counters);
  return out;
}

}  // namespace wdcat
