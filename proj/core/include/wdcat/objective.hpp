#pragma once

#include "wdcat/types.hpp"

#include <memory>
#include <optional>
#include <string>

namespace wdcat {

/// Smooth part f0 = (1/n) sum_i f_i of a composite objective.
///
/// Implementations must be immutable after construction: every member is
/// const and may be called concurrently.
class SmoothFiniteSum {
 public:
  virtual ~SmoothFiniteSum() = default;

  virtual Index dimension() const = 0;
  virtual Index size() const = 0;

  virtual double component_value(Index i, const Vector& x) const = 0;
  /// Writes grad f_i(x) into `grad` (resized as needed).
  virtual void component_gradient(Index i, const Vector& x, Vector& grad) const = 0;

  /// Mean of the component values. Override when a closed form is cheaper.
  virtual double value(const Vector& x) const;
  /// Mean of the component gradients.
  virtual void gradient(const Vector& x, Vector& grad) const;
};

/// Nonsmooth convex part psi with a computable proximal operator.
class Regularizer {
 public:
  virtual ~Regularizer() = default;

  virtual double value(const Vector& x) const = 0;
  /// out = argmin_z psi(z) + ||z - v||^2 / (2 step).
  virtual void prox(const Vector& v, double step, Vector& out) const = 0;
  virtual bool is_zero() const { return false; }
  virtual std::string name() const = 0;
};

/// f(x) = f0(x) + psi(x) together with the smoothness estimate L of the
/// components and, when known, the weak-convexity constant rho.
class CompositeObjective {
 public:
  CompositeObjective(std::shared_ptr<const SmoothFiniteSum> smooth,
                     std::shared_ptr<const Regularizer> regularizer,
                     double lipschitz,
                     std::optional<double> weak_convexity = std::nullopt);

  Index dimension() const { return smooth_->dimension(); }
  Index size() const { return smooth_->size(); }
  double lipschitz() const { return lipschitz_; }
  std::optional<double> weak_convexity() const { return weak_convexity_; }
  bool is_smooth() const { return regularizer_->is_zero(); }

  const SmoothFiniteSum& smooth() const { return *smooth_; }
  const Regularizer& regularizer() const { return *regularizer_; }

  double smooth_value(const Vector& x, EvalCounters& counters) const;
  void smooth_gradient(const Vector& x, Vector& grad, EvalCounters& counters) const;
  void component_gradient(Index i, const Vector& x, Vector& grad, EvalCounters& counters) const;
  void prox(const Vector& v, double step, Vector& out, EvalCounters& counters) const;

 private:
  std::shared_ptr<const SmoothFiniteSum> smooth_;
  std::shared_ptr<const Regularizer> regularizer_;
  double lipschitz_;
  std::optional<double> weak_convexity_;
};

/// f0(x) + psi(x). Non-finite results are returned as-is (+inf outside the
/// domain of psi, NaN on pathological input); nothing is clamped.
double evaluate(const CompositeObjective& obj, const Vector& x, EvalCounters& counters);
double evaluate(const CompositeObjective& obj, const Vector& x);

}  // namespace wdcat
