#pragma once

#include "wdcat/subproblem.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wdcat {

enum class Method { GD, SVRG, SAGA };

std::string to_string(Method method);
Method parse_method(const std::string& text);

/// Inner method M and its hyperparameters.
struct SolverKind {
  Method method = Method::SVRG;
  /// SVRG steps between full-gradient snapshots; 0 means n.
  Index epoch_length = 0;
  /// Overrides the default stepsize rule when set.
  std::optional<double> step;

  void validate() const;
};

/// Complexity constants of a method at smoothness L and n components.
struct MethodConstants {
  double inv_tau_L = 0.0;    // 1/tau_L
  double kappa_cvx = 0.0;
  double inv_tau_cvx = 0.0;  // 1/tau_{kappa_cvx}
  double a_4L = 0.0;

  double tau_L() const { return 1.0 / inv_tau_L; }
  double tau_cvx() const { return 1.0 / inv_tau_cvx; }
};

MethodConstants method_constants(Method method, double lipschitz, Index n);

struct InnerRunResult {
  Vector z;
  std::int64_t iterations = 0;
  EvalCounters evals;
  bool diverged = false;
};

/// Default stepsize of `method` on a smooth part with Lipschitz constant
/// `smoothness`: 1/smoothness for GD, 1/(2 smoothness) for SVRG and SAGA.
double default_step(Method method, double smoothness);

/// Initial point for M on f_kappa(.; y): y when psi = 0, otherwise one
/// prox-gradient step from y with step 1/(L + kappa).
Vector warm_start(const ProxSubproblem& sub, EvalCounters& counters);
Vector warm_start(const ProxSubproblem& sub);

/// A resumable run of M on the model f0 + (kappa/2)||. - y||^2 + psi.
///
/// kappa may be 0 (no center), which is how unwrapped baselines run. All
/// state (SVRG snapshot, SAGA table, sampling stream) lives in the object,
/// so `advance` can be called repeatedly to continue one trajectory.
class MethodRun {
 public:
  MethodRun(const SolverKind& kind, const CompositeObjective& objective,
            std::optional<Vector> center, double kappa, double step, Vector z0,
            std::uint64_t seed);

  /// Runs `iters` more iterations; stops early and flags divergence on a
  /// non-finite iterate.
  void advance(std::int64_t iters);

  const Vector& iterate() const { return z_; }
  std::int64_t iterations() const { return iterations_; }
  const EvalCounters& evals() const { return evals_; }
  bool diverged() const { return diverged_; }
  double step() const { return step_; }

  InnerRunResult result() const { return {z_, iterations_, evals_, diverged_}; }

 private:
  void smooth_gradient(const Vector& x, Vector& grad);
  void add_center_term(const Vector& x, Vector& grad) const;
  void gd_step();
  void svrg_step();
  void saga_step();

  SolverKind kind_;
  const CompositeObjective* objective_;
  std::optional<Vector> center_;
  double kappa_;
  double step_;
  Vector z_;
  std::uint64_t seed_;

  std::int64_t iterations_ = 0;
  EvalCounters evals_;
  bool diverged_ = false;

  // SVRG
  Index epoch_length_ = 1;
  Vector snapshot_;
  Vector snapshot_grad_;
  // SAGA
  Matrix table_;
  Vector table_mean_;
  bool table_ready_ = false;

  Vector grad_;
  Vector gi_;
  Vector gi_ref_;
  Vector buffer_;
};

/// Runs exactly `iters` iterations of M on the subproblem from z0. GD uses
/// stepsize 1/(L + kappa); SVRG and SAGA use 1/(2(L + kappa)). For SVRG one
/// iteration is one stochastic step; a snapshot is taken every epoch_length
/// steps starting with step 0.
InnerRunResult run_inner(const SolverKind& kind, const ProxSubproblem& sub, const Vector& z0,
                         std::int64_t iters, std::uint64_t seed);

}  // namespace wdcat
