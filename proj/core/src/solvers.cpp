#include "wdcat/solvers.hpp"

#include "wdcat/rng.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace wdcat {

std::string to_string(Method method) {
  switch (method) {
    case Method::GD: return "gd";
    case Method::SVRG: return "svrg";
    case Method::SAGA: return "saga";
  }
  return "unknown";
}

Method parse_method(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "gd") return Method::GD;
  if (lower == "svrg") return Method::SVRG;
  if (lower == "saga") return Method::SAGA;
  throw Error("unknown method '" + text + "' (expected gd, svrg or saga)");
}

void SolverKind::validate() const {
  if (epoch_length < 0) throw Error("SolverKind: epoch length must be >= 1 (or 0 for n)");
  if (step && !(*step > 0.0)) throw Error("SolverKind: stepsize must be positive");
}

MethodConstants method_constants(Method method, double lipschitz, Index n) {
  if (!(lipschitz > 0.0)) throw Error("method_constants: L must be positive");
  if (n < 1) throw Error("method_constants: n must be at least 1");
  const double L = lipschitz;
  const auto dn = static_cast<double>(n);
  switch (method) {
    case Method::GD:
      return {2.0, L, 2.0, 8.0 * L};
    case Method::SVRG:
      if (n == 1) return method_constants(Method::GD, lipschitz, n);
      return {dn + 2.0, L / (dn - 1.0), 2.0 * dn, 8.0 * L};
    case Method::SAGA:
      return {4.0 * dn, 3.0 * L / (4.0 * dn - 3.0), 4.0 * dn, 8.0 * L * dn};
  }
  throw Error("method_constants: unknown method");
}

double default_step(Method method, double smoothness) {
  return method == Method::GD ? 1.0 / smoothness : 1.0 / (2.0 * smoothness);
}

Vector warm_start(const ProxSubproblem& sub, EvalCounters& counters) {
  const CompositeObjective& obj = sub.objective();
  if (obj.is_smooth()) return sub.center();
  const double step = 1.0 / sub.smooth_lipschitz();
  Vector grad;
  obj.smooth_gradient(sub.center(), grad, counters);
  Vector out;
  obj.prox(sub.center() - step * grad, step, out, counters);
  return out;
}

Vector warm_start(const ProxSubproblem& sub) {
  EvalCounters scratch;
  return warm_start(sub, scratch);
}

MethodRun::MethodRun(const SolverKind& kind, const CompositeObjective& objective,
                     std::optional<Vector> center, double kappa, double step, Vector z0,
                     std::uint64_t seed)
    : kind_(kind),
      objective_(&objective),
      center_(std::move(center)),
      kappa_(kappa),
      step_(step),
      z_(std::move(z0)),
      seed_(seed) {
  kind_.validate();
  if (!(step_ > 0.0)) throw Error("MethodRun: stepsize must be positive");
  if (kappa_ < 0.0) throw Error("MethodRun: kappa must be non-negative");
  if (kappa_ > 0.0 && !center_) throw Error("MethodRun: kappa > 0 requires a center");
  if (z_.size() != objective.dimension()) throw Error("MethodRun: start point dimension mismatch");
  epoch_length_ = kind_.epoch_length > 0 ? kind_.epoch_length : objective.size();
}

void MethodRun::add_center_term(const Vector& x, Vector& grad) const {
  if (kappa_ > 0.0) grad.noalias() += kappa_ * (x - *center_);
}

void MethodRun::smooth_gradient(const Vector& x, Vector& grad) {
  objective_->smooth_gradient(x, grad, evals_);
  add_center_term(x, grad);
}

void MethodRun::gd_step() {
  smooth_gradient(z_, grad_);
  buffer_ = z_ - step_ * grad_;
  objective_->prox(buffer_, step_, z_, evals_);
}

void MethodRun::svrg_step() {
  if (iterations_ % epoch_length_ == 0) {
    snapshot_ = z_;
    objective_->smooth_gradient(snapshot_, snapshot_grad_, evals_);
  }
  Rng rng(seed_, static_cast<std::uint64_t>(iterations_));
  const auto i = static_cast<Index>(rng.index(static_cast<std::uint64_t>(objective_->size())));
  objective_->component_gradient(i, z_, gi_, evals_);
  objective_->component_gradient(i, snapshot_, gi_ref_, evals_);
  grad_ = gi_ - gi_ref_ + snapshot_grad_;
  add_center_term(z_, grad_);
  buffer_ = z_ - step_ * grad_;
  objective_->prox(buffer_, step_, z_, evals_);
}

void MethodRun::saga_step() {
  const Index n = objective_->size();
  if (!table_ready_) {
    table_.resize(objective_->dimension(), n);
    table_mean_.setZero(objective_->dimension());
    for (Index i = 0; i < n; ++i) {
      objective_->component_gradient(i, z_, gi_, evals_);
      table_.col(i) = gi_;
      table_mean_ += gi_;
    }
    table_mean_ /= static_cast<double>(n);
    table_ready_ = true;
  }
  Rng rng(seed_, static_cast<std::uint64_t>(iterations_));
  const auto j = static_cast<Index>(rng.index(static_cast<std::uint64_t>(n)));
  objective_->component_gradient(j, z_, gi_, evals_);
  grad_ = gi_ - table_.col(j) + table_mean_;
  add_center_term(z_, grad_);
  table_mean_ += (gi_ - table_.col(j)) / static_cast<double>(n);
  table_.col(j) = gi_;
  buffer_ = z_ - step_ * grad_;
  objective_->prox(buffer_, step_, z_, evals_);
}

void MethodRun::advance(std::int64_t iters) {
  if (iters < 0) throw Error("MethodRun: iteration count must be non-negative");
  for (std::int64_t t = 0; t < iters && !diverged_; ++t) {
    switch (kind_.method) {
      case Method::GD: gd_step(); break;
      case Method::SVRG: svrg_step(); break;
      case Method::SAGA: saga_step(); break;
    }
    ++iterations_;
    if (!z_.allFinite()) diverged_ = true;
  }
}

InnerRunResult run_inner(const SolverKind& kind, const ProxSubproblem& sub, const Vector& z0,
                         std::int64_t iters, std::uint64_t seed) {
  if (iters < 0) throw Error("run_inner: iteration count must be non-negative");
  const double step = kind.step.value_or(default_step(kind.method, sub.smooth_lipschitz()));
  MethodRun run(kind, sub.objective(), sub.center(), sub.kappa(), step, z0, seed);
  run.advance(iters);
  return run.result();
}

}  // namespace wdcat
