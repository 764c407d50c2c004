#pragma once

#include "wdcat/subproblem.hpp"

namespace wdcat {

/// Result of one extra prox-gradient step taken from a query point x.
///
/// `residual` is the norm of the explicit subgradient
///   xi = (x - z_plus)/step + grad s(z_plus) - grad s(x),
/// which lies in the subdifferential of the measured function at z_plus.
/// `mapping_norm` is the gradient-mapping norm ||x - z_plus|| / step; for
/// convex psi it never exceeds dist(0, subdifferential at x).
struct StationarityReport {
  Vector z_plus;
  double residual = 0.0;
  double mapping_norm = 0.0;
  double step = 0.0;
};

/// Measures the subproblem f_kappa(.; y) at z with step 1/(L + kappa).
/// Costs two full gradients and one prox.
StationarityReport stationarity_residual(const ProxSubproblem& sub, const Vector& z,
                                         EvalCounters& counters);
StationarityReport stationarity_residual(const ProxSubproblem& sub, const Vector& z);

/// Measures f itself at x with step 1/L. The outer stationarity surrogate
/// reported in traces and used by the outer stopping test is
/// `mapping_norm`, a lower bound on dist(0, subdifferential of f at x)
/// that coincides with ||grad f(x)|| when psi = 0.
StationarityReport outer_stationarity(const CompositeObjective& obj, const Vector& x,
                                      EvalCounters& counters);
StationarityReport outer_stationarity(const CompositeObjective& obj, const Vector& x);

}  // namespace wdcat
