#pragma once

#include "wdcat/objective.hpp"

namespace wdcat {

/// f_kappa(x; y) = f(x) + (kappa/2) ||x - y||^2.
///
/// Holds a non-owning reference to the base objective, which must outlive
/// the subproblem. The smooth part is f0 + (kappa/2)||. - y||^2 with
/// Lipschitz constant L + kappa; psi is unchanged.
class ProxSubproblem {
 public:
  ProxSubproblem(const CompositeObjective& objective, Vector center, double kappa);

  const CompositeObjective& objective() const { return *objective_; }
  const Vector& center() const { return center_; }
  double kappa() const { return kappa_; }
  double smooth_lipschitz() const { return objective_->lipschitz() + kappa_; }

  double value(const Vector& x, EvalCounters& counters) const;
  /// grad f0(x) + kappa (x - y).
  void smooth_gradient(const Vector& x, Vector& grad, EvalCounters& counters) const;

 private:
  const CompositeObjective* objective_;
  Vector center_;
  double kappa_;
};

double subproblem_evaluate(const ProxSubproblem& sub, const Vector& x, EvalCounters& counters);
double subproblem_evaluate(const ProxSubproblem& sub, const Vector& x);

/// prox_{step psi}(x - step * grad s(x)) where s is the smooth part.
/// One full gradient and one prox call are counted.
Vector prox_gradient_step(const ProxSubproblem& sub, double step, const Vector& x,
                          EvalCounters& counters);
Vector prox_gradient_step(const CompositeObjective& obj, double step, const Vector& x,
                          EvalCounters& counters);

}  // namespace wdcat
