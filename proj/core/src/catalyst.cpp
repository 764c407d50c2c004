#include "wdcat/catalyst.hpp"

#include "wdcat/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace wdcat {

void CatalystConfig::validate() const {
  if (!(kappa0 > 0.0)) throw Error("CatalystConfig: kappa0 must be positive");
  if (!(kappa_cvx > 0.0)) throw Error("CatalystConfig: kappa_cvx must be positive");
  if (T < 1) throw Error("CatalystConfig: T must be at least 1");
  if (S < 1) throw Error("CatalystConfig: S must be at least 1");
  if (!(epsilon >= 0.0)) throw Error("CatalystConfig: epsilon must be non-negative");
  if (max_outer < 0) throw Error("CatalystConfig: max_outer must be non-negative");
  if (!(inner_tolerance >= 0.0)) throw Error("CatalystConfig: inner tolerance must be non-negative");
  if (inner_max_iterations < 1) throw Error("CatalystConfig: inner_max_iterations must be positive");
  if (max_doublings < 0) throw Error("CatalystConfig: max_doublings must be non-negative");
  if (basic_max_chunks < 1) throw Error("CatalystConfig: basic_max_chunks must be positive");
}

std::string to_string(Winner winner) { return winner == Winner::Prox ? "prox" : "accel"; }

std::string to_string(RunStatus status) {
  switch (status) {
    case RunStatus::Converged: return "converged";
    case RunStatus::MaxOuter: return "max-outer";
    case RunStatus::Budget: return "budget";
    case RunStatus::Aborted: return "aborted";
  }
  return "unknown";
}

double alpha_next(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error("alpha_next: alpha must lie in (0, 1]");
  // Root of a'^2 + a^2 a' - a^2 = 0, written without cancellation.
  const double a2 = alpha * alpha;
  return 2.0 * a2 / (a2 + std::sqrt(a2 * a2 + 4.0 * a2));
}

Vector extrapolate(double alpha, const Vector& v_prev, const Vector& x_prev) {
  if (v_prev.size() != x_prev.size()) throw Error("extrapolate: dimension mismatch");
  if (alpha == 1.0) return v_prev;
  return alpha * v_prev + (1.0 - alpha) * x_prev;
}

Vector update_anchor(double alpha, const Vector& x_prev, const Vector& x_accel) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error("update_anchor: alpha must lie in (0, 1]");
  if (x_prev.size() != x_accel.size()) throw Error("update_anchor: dimension mismatch");
  if (alpha == 1.0) return x_accel;
  return x_prev + (x_accel - x_prev) / alpha;
}

CriteriaResult check_criteria(const ProxSubproblem& sub, const Vector& z, double tolerance_factor,
                              EvalCounters& counters) {
  if (!(tolerance_factor > 0.0)) throw Error("check_criteria: tolerance factor must be positive");
  CriteriaResult out;
  if (!z.allFinite()) {
    out.z_used = z;
    return out;
  }
  StationarityReport report = stationarity_residual(sub, z, counters);
  out.residual = report.residual;
  out.z_used = std::move(report.z_plus);
  out.value = sub.value(out.z_used, counters);
  out.center_value = sub.value(sub.center(), counters);
  out.distance = (out.z_used - sub.center()).norm();
  if (!std::isfinite(out.value) || !std::isfinite(out.center_value) ||
      !std::isfinite(out.residual)) {
    return out;
  }
  out.descent_ok = out.value <= out.center_value;
  out.stationarity_ok =
      out.residual < tolerance_factor * sub.kappa() * out.distance || out.residual == 0.0;
  return out;
}

AdaptError::AdaptError(const std::string& what, double last_kappa_, int doublings_,
                       double last_residual_, double last_distance_)
    : Error(what),
      last_kappa(last_kappa_),
      doublings(doublings_),
      last_residual(last_residual_),
      last_distance(last_distance_) {}

namespace {

// Continues `run` in chunks until the subproblem residual reaches `tolerance`.
void refine_to_tolerance(MethodRun& run, const ProxSubproblem& sub, double tolerance,
                         std::int64_t chunk, std::int64_t max_iterations, EvalCounters& counters) {
  while (!run.diverged()) {
    if (stationarity_residual(sub, run.iterate(), counters).residual <= tolerance) return;
    if (run.iterations() >= max_iterations) return;
    run.advance(std::min(chunk, max_iterations - run.iterations()));
  }
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

AdaptResult auto_adapt(const CompositeObjective& objective, const Vector& x, double kappa,
                       std::int64_t T, const SolverKind& kind, std::uint64_t seed,
                       const AdaptOptions& options) {
  if (!(kappa > 0.0)) throw Error("auto_adapt: kappa must be positive");
  if (T < 1) throw Error("auto_adapt: T must be at least 1");
  AdaptResult out;
  double last_residual = 0.0;
  double last_distance = 0.0;
  for (int doublings = 0;; ++doublings) {
    const ProxSubproblem sub(objective, x, kappa);
    const Vector z0 = options.warm_point ? *options.warm_point : warm_start(sub, out.evals);
    const double step = kind.step.value_or(default_step(kind.method, sub.smooth_lipschitz()));
    MethodRun run(kind, objective, x, kappa, step, z0,
                  derive_seed(seed, static_cast<std::uint64_t>(doublings)));
    run.advance(T);
    if (options.inner_tolerance > 0.0)
      refine_to_tolerance(run, sub, options.inner_tolerance, T, options.inner_max_iterations,
                          out.evals);
    out.evals += run.evals();
    if (!run.diverged()) {
      CriteriaResult crit = check_criteria(sub, run.iterate(), 1.0, out.evals);
      last_residual = crit.residual;
      last_distance = crit.distance;
      if (crit.descent_ok && crit.stationarity_ok) {
        out.z = std::move(crit.z_used);
        out.kappa = kappa;
        out.doublings = doublings;
        out.residual = crit.residual;
        return out;
      }
    }
    if (doublings >= options.max_doublings) {
      std::ostringstream msg;
      msg << "auto_adapt: criteria still failing after " << doublings
          << " doublings (kappa=" << kappa << ", residual=" << last_residual
          << ", distance=" << last_distance << ")";
      throw AdaptError(msg.str(), kappa, doublings, last_residual, last_distance);
    }
    kappa *= 2.0;
  }
}

std::int64_t budget_T(Method method, double lipschitz, Index n) {
  const MethodConstants c = method_constants(method, lipschitz, n);
  const double bound = c.inv_tau_L * std::log(40.0 * c.a_4L / lipschitz);
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(bound)));
}

std::int64_t budget_S(Method method, double lipschitz, Index n) {
  const MethodConstants c = method_constants(method, lipschitz, n);
  const double k = c.kappa_cvx;
  const double bound = c.inv_tau_cvx * std::log(8.0 * c.a_4L * (k + lipschitz) / (k * k));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(bound)));
}

CatalystResult run_catalyst(const CompositeObjective& objective, const Vector& x0,
                            const CatalystConfig& config, const SolverKind& kind) {
  config.validate();
  kind.validate();
  if (x0.size() != objective.dimension()) throw Error("run_catalyst: x0 dimension mismatch");

  const auto start = std::chrono::steady_clock::now();
  CatalystResult result;
  CatalystState state;
  state.x = x0;
  state.v = x0;
  state.alpha = 1.0;
  state.kappa = config.kappa0;
  state.fx = evaluate(objective, x0, state.counters);
  result.x = x0;
  result.fval = state.fx;

  auto finish = [&](RunStatus status, std::string message = {}) {
    result.status = status;
    result.message = std::move(message);
    result.x = state.x;
    result.fval = state.fx;
    result.counters = state.counters;
    return result;
  };

  if (!std::isfinite(state.fx)) return finish(RunStatus::Aborted, "non-finite objective at x0");

  for (state.k = 1; state.k <= config.max_outer; ++state.k) {
    const std::int64_t k = state.k;
    if (config.grad_budget && state.counters.gradients >= *config.grad_budget)
      return finish(RunStatus::Budget);

    std::optional<Vector> lazy_warm;
    if (config.lazy_prox && state.last_winner_accel) lazy_warm = state.x;

    // Proximal-point step.
    Vector x_bar;
    double kappa_k = state.kappa;
    double prox_residual = 0.0;
    int doublings = 0;
    if (config.mode == CatalystMode::Auto) {
      AdaptOptions options;
      options.max_doublings = config.max_doublings;
      options.inner_tolerance = config.inner_tolerance;
      options.inner_max_iterations = config.inner_max_iterations;
      options.warm_point = lazy_warm;
      try {
        AdaptResult adapted = auto_adapt(objective, state.x, state.kappa, config.T, kind,
                                         derive_seed(config.seed, static_cast<std::uint64_t>(k), 1),
                                         options);
        state.counters += adapted.evals;
        x_bar = std::move(adapted.z);
        kappa_k = adapted.kappa;
        doublings = adapted.doublings;
        prox_residual = adapted.residual;
      } catch (const AdaptError& e) {
        return finish(RunStatus::Aborted, e.what());
      }
      state.kappa = kappa_k;
    } else {
      const ProxSubproblem sub(objective, state.x, config.kappa0);
      const Vector z0 = lazy_warm ? *lazy_warm : warm_start(sub, state.counters);
      const double step = kind.step.value_or(default_step(kind.method, sub.smooth_lipschitz()));
      MethodRun run(kind, objective, state.x, config.kappa0, step, z0,
                    derive_seed(config.seed, static_cast<std::uint64_t>(k), 1));
      run.advance(config.T);
      EvalCounters check_evals;
      bool accepted = false;
      for (int chunk = 1; !run.diverged(); ++chunk) {
        if (config.inner_tolerance > 0.0)
          refine_to_tolerance(run, sub, config.inner_tolerance, config.T,
                              config.inner_max_iterations, check_evals);
        CriteriaResult crit = check_criteria(sub, run.iterate(), 1.0, check_evals);
        if (crit.descent_ok && crit.stationarity_ok) {
          x_bar = std::move(crit.z_used);
          prox_residual = crit.residual;
          accepted = true;
          break;
        }
        if (chunk >= config.basic_max_chunks) break;
        run.advance(config.T);
      }
      state.counters += run.evals();
      state.counters += check_evals;
      if (!accepted) {
        std::ostringstream msg;
        msg << "proximal step failed its stopping criteria at k=" << k << " after "
            << run.iterations() << " iterations" << (run.diverged() ? " (diverged)" : "");
        return finish(RunStatus::Aborted, msg.str());
      }
    }

    // Accelerated step.
    const double alpha_k = state.alpha;
    const Vector y = extrapolate(alpha_k, state.v, state.x);
    const ProxSubproblem accel_sub(objective, y, config.kappa_cvx);
    std::int64_t s_iters = config.S;
    if (config.use_logk_factor)
      s_iters *= std::max<std::int64_t>(
          1, static_cast<std::int64_t>(std::ceil(std::log(static_cast<double>(k) + 1.0))));
    const Vector z0 = warm_start(accel_sub, state.counters);
    const double step =
        kind.step.value_or(default_step(kind.method, accel_sub.smooth_lipschitz()));
    MethodRun run(kind, objective, y, config.kappa_cvx, step, z0,
                  derive_seed(config.seed, static_cast<std::uint64_t>(k), 2));
    run.advance(s_iters);
    if (config.inner_tolerance > 0.0)
      refine_to_tolerance(run, accel_sub, config.inner_tolerance, s_iters,
                          config.inner_max_iterations, state.counters);
    state.counters += run.evals();
    if (run.diverged()) {
      std::ostringstream msg;
      msg << "extrapolation step diverged at k=" << k;
      return finish(RunStatus::Aborted, msg.str());
    }
    Vector x_tilde = run.iterate();
    bool accel_stationary = false;
    if (config.mode == CatalystMode::Basic) {
      CriteriaResult crit =
          check_criteria(accel_sub, x_tilde, 1.0 / static_cast<double>(k + 1), state.counters);
      accel_stationary = crit.stationarity_ok;
      x_tilde = std::move(crit.z_used);
    }

    // Anchor, momentum and pick.
    Vector v_next = update_anchor(alpha_k, state.x, x_tilde);
    const double f_bar = evaluate(objective, x_bar, state.counters);
    const double f_tilde = evaluate(objective, x_tilde, state.counters);
    if (!std::isfinite(f_bar) || std::isnan(f_tilde)) {
      std::ostringstream msg;
      msg << "non-finite objective at k=" << k;
      return finish(RunStatus::Aborted, msg.str());
    }
    const Winner winner = f_tilde <= f_bar ? Winner::Accel : Winner::Prox;
    const double prox_step = (x_bar - state.x).norm();

    TraceRecord row;
    row.k = k;
    row.prox_step = prox_step;
    row.prox_residual = prox_residual;
    row.kappa = kappa_k;
    row.winner = winner;
    row.doublings = doublings;
    row.accel_stationary = accel_stationary;
    row.alpha = alpha_k;
    row.stationarity = outer_stationarity(objective, x_bar, result.telemetry).mapping_norm;

    state.v = std::move(v_next);
    state.alpha = alpha_next(alpha_k);
    state.last_winner_accel = winner == Winner::Accel;
    if (winner == Winner::Accel) {
      state.x = std::move(x_tilde);
      state.fx = f_tilde;
    } else {
      state.x = std::move(x_bar);
      state.fx = f_bar;
    }

    row.fval = state.fx;
    row.grad_evals = state.counters.gradients;
    row.elapsed_s = elapsed_since(start);
    result.trace.push_back(row);
    result.kappa_max = std::max(result.kappa_max, kappa_k);
    result.total_doublings += doublings;

    if (config.epsilon > 0.0 && row.stationarity < config.epsilon)
      return finish(RunStatus::Converged);
  }
  state.k = config.max_outer;
  return finish(RunStatus::MaxOuter);
}

}  // namespace wdcat
