#pragma once

#include "wdcat/solvers.hpp"
#include "wdcat/stationarity.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wdcat {

enum class CatalystMode { Basic, Auto };

struct CatalystConfig {
  double kappa0 = 1.0;
  double kappa_cvx = 1.0;
  std::int64_t T = 1;
  std::int64_t S = 1;
  /// Runs S * ceil(log(k+1)) iterations on the extrapolation step and
  /// tightens its stationarity factor to 1/(k+1).
  bool use_logk_factor = false;
  /// Outer target on the stationarity surrogate at x_bar_k; 0 disables.
  double epsilon = 0.0;
  std::int64_t max_outer = 100;
  CatalystMode mode = CatalystMode::Auto;
  std::uint64_t seed = 0;

  /// When positive, each inner solve continues past its budget until the
  /// subproblem residual drops to this value (near-exact solves).
  double inner_tolerance = 0.0;
  std::int64_t inner_max_iterations = 1'000'000;
  /// Warm-start the proximal step from x_tilde_{k-1} when it won the pick.
  bool lazy_prox = false;
  /// Stops once cumulative component gradients reach this budget.
  std::optional<std::uint64_t> grad_budget;
  int max_doublings = 60;
  /// Basic mode retries the proximal step in T-sized chunks up to this many
  /// chunks in total before giving up.
  int basic_max_chunks = 10;

  void validate() const;
};

enum class Winner { Prox, Accel };

std::string to_string(Winner winner);

/// One outer iteration's telemetry.
struct TraceRecord {
  std::int64_t k = 0;
  double fval = 0.0;          // f(x_k)
  double stationarity = 0.0;  // outer surrogate at x_bar_k
  double prox_step = 0.0;     // ||x_bar_k - x_{k-1}||
  double prox_residual = 0.0; // subproblem residual at x_bar_k
  double kappa = 0.0;         // kappa_k used for the proximal step
  Winner winner = Winner::Accel;
  std::uint64_t grad_evals = 0;  // cumulative, algorithm cost only
  double elapsed_s = 0.0;
  int doublings = 0;              // doublings spent in this iteration
  bool accel_stationary = false;  // extrapolation step met its stationarity test
  double alpha = 1.0;             // alpha_k used in this iteration
};

struct CatalystState {
  std::int64_t k = 0;
  Vector x;
  Vector v;
  double alpha = 1.0;
  double kappa = 0.0;
  double fx = 0.0;
  EvalCounters counters;
  bool last_winner_accel = false;
};

enum class RunStatus { Converged, MaxOuter, Budget, Aborted };

std::string to_string(RunStatus status);

struct CatalystResult {
  Vector x;
  double fval = 0.0;
  std::vector<TraceRecord> trace;
  RunStatus status = RunStatus::MaxOuter;
  std::string message;
  EvalCounters counters;
  /// Counters spent on trace telemetry only (outer stationarity).
  EvalCounters telemetry;
  double kappa_max = 0.0;
  int total_doublings = 0;
};

/// Root in (0,1) of (1 - a')/a'^2 = 1/a^2.
double alpha_next(double alpha);

/// alpha v_prev + (1 - alpha) x_prev.
Vector extrapolate(double alpha, const Vector& v_prev, const Vector& x_prev);

/// x_prev + (x_accel - x_prev) / alpha.
Vector update_anchor(double alpha, const Vector& x_prev, const Vector& x_accel);

struct CriteriaResult {
  bool descent_ok = false;
  bool stationarity_ok = false;
  Vector z_used;
  double residual = 0.0;
  double distance = 0.0;  // ||z_used - y||
  double value = 0.0;     // f_kappa(z_used; y)
  double center_value = 0.0;
};

/// Descent and adaptive-stationarity tests, both evaluated at the post-prox
/// point z+ of one extra prox-gradient step from z:
///   descent:      f_kappa(z+; y) <= f_kappa(y; y)
///   stationarity: r < factor * kappa * ||z+ - y||, or r == 0.
CriteriaResult check_criteria(const ProxSubproblem& sub, const Vector& z,
                              double tolerance_factor, EvalCounters& counters);

struct AdaptResult {
  Vector z;
  double kappa = 0.0;
  int doublings = 0;
  double residual = 0.0;
  EvalCounters evals;
};

class AdaptError : public Error {
 public:
  AdaptError(const std::string& what, double last_kappa, int doublings, double last_residual,
             double last_distance);
  double last_kappa;
  int doublings;
  double last_residual;
  double last_distance;
};

struct AdaptOptions {
  int max_doublings = 60;
  double inner_tolerance = 0.0;
  std::int64_t inner_max_iterations = 1'000'000;
  /// Replaces the prox-gradient warm start when set.
  std::optional<Vector> warm_point;
};

/// Runs M for T iterations on f_kappa(.; x), doubling kappa until both
/// criteria hold. Throws AdaptError after `max_doublings` doublings.
AdaptResult auto_adapt(const CompositeObjective& objective, const Vector& x, double kappa,
                       std::int64_t T, const SolverKind& kind, std::uint64_t seed,
                       const AdaptOptions& options = {});

/// Smallest T with T >= (1/tau_L) log(40 A_4L / L).
std::int64_t budget_T(Method method, double lipschitz, Index n);
/// Smallest S with S >= (1/tau_cvx) log(8 A (kappa_cvx + L) / kappa_cvx^2),
/// taking A = A_4L. The (k+1)^2 factor is covered at run time by
/// use_logk_factor.
std::int64_t budget_S(Method method, double lipschitz, Index n);

/// Outer loop of the accelerated scheme. mode Basic keeps kappa = kappa0;
/// mode Auto adapts it with auto_adapt. Never throws for algorithmic
/// failures: the result carries status Aborted and the partial trace.
CatalystResult run_catalyst(const CompositeObjective& objective, const Vector& x0,
                            const CatalystConfig& config, const SolverKind& kind);

}  // namespace wdcat
