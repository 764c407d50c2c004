#include "wdcat/stationarity.hpp"

namespace wdcat {

namespace {

// Shared construction; `gradient` evaluates the smooth part being measured.
template <class Gradient, class Prox>
StationarityReport measure(const Vector& z, double step, Gradient&& gradient, Prox&& prox) {
  Vector grad_z;
  gradient(z, grad_z);
  StationarityReport report;
  report.step = step;
  prox(Vector(z - step * grad_z), step, report.z_plus);
  Vector grad_plus;
  gradient(report.z_plus, grad_plus);
  const Vector displacement = z - report.z_plus;
  const Vector witness = displacement / step + grad_plus - grad_z;
  report.residual = witness.norm();
  report.mapping_norm = displacement.norm() / step;
  return report;
}

}  // namespace

StationarityReport stationarity_residual(const ProxSubproblem& sub, const Vector& z,
                                         EvalCounters& counters) {
  if (z.size() != sub.objective().dimension()) throw Error("stationarity_residual: dimension mismatch");
  const double step = 1.0 / sub.smooth_lipschitz();
  return measure(
      z, step, [&](const Vector& x, Vector& g) { sub.smooth_gradient(x, g, counters); },
      [&](const Vector& v, double s, Vector& out) { sub.objective().prox(v, s, out, counters); });
}

StationarityReport stationarity_residual(const ProxSubproblem& sub, const Vector& z) {
  EvalCounters scratch;
  return stationarity_residual(sub, z, scratch);
}

StationarityReport outer_stationarity(const CompositeObjective& obj, const Vector& x,
                                      EvalCounters& counters) {
  if (x.size() != obj.dimension()) throw Error("outer_stationarity: dimension mismatch");
  const double step = 1.0 / obj.lipschitz();
  return measure(
      x, step, [&](const Vector& y, Vector& g) { obj.smooth_gradient(y, g, counters); },
      [&](const Vector& v, double s, Vector& out) { obj.prox(v, s, out, counters); });
}

StationarityReport outer_stationarity(const CompositeObjective& obj, const Vector& x) {
  EvalCounters scratch;
  return outer_stationarity(obj, x, scratch);
}

}  // namespace wdcat
