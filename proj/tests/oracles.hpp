#pragma once

// Brute-force reference computations used to check the library. Nothing here
// calls into wdcat, so agreement is a genuine cross-check.

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace oracle {

using Vec = Eigen::VectorXd;
using Real = long double;
using Fn1 = std::function<Real(Real)>;
using FnN = std::function<double(const Vec&)>;

/// Minimizes a unimodal scalar function on [lo, hi]: coarse grid, then
/// golden-section search around the best grid point. Extended precision
/// keeps the located minimizer accurate well below 1e-8.
inline Real grid_refine_min(const Fn1& f, Real lo, Real hi, int grid = 2001) {
  Real best = lo, best_val = f(lo);
  const Real h = (hi - lo) / (grid - 1);
  for (int i = 1; i < grid; ++i) {
    const Real t = lo + i * h;
    const Real v = f(t);
    if (v < best_val) {
      best_val = v;
      best = t;
    }
  }
  Real a = std::max(lo, best - h), b = std::min(hi, best + h);
  const Real g = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  Real c = b - g * (b - a), d = a + g * (b - a);
  Real fc = f(c), fd = f(d);
  for (int it = 0; it < 300 && b - a > 1e-19L * (1.0L + std::abs(a)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  const Real mid = 0.5L * (a + b);
  Real out = mid, out_val = f(mid);
  for (Real t : {lo, hi, best})
    if (f(t) < out_val) {
      out = t;
      out_val = f(t);
    }
  return out;
}

/// argmin_z phi(z) + (z - v)^2 / (2 step) for a convex scalar phi.
inline double scalar_prox(const Fn1& phi, double v, double step) {
  const Real radius = 4.0L * std::abs(v) + 10.0L;
  const Real vv = v;
  return static_cast<double>(grid_refine_min(
      [&](Real z) { return phi(z) + (z - vv) * (z - vv) / (2.0L * step); }, vv - radius,
      vv + radius));
}

/// Euclidean projection of a 2-D point onto the disk of radius r, searched in
/// polar coordinates (radius by golden section for each angle of a grid,
/// then angle refinement).
inline Vec disk_projection(const Vec& v, double r) {
  auto dist_at = [&](Real theta, Real rad) {
    const Real dx = rad * std::cos(theta) - v(0), dy = rad * std::sin(theta) - v(1);
    return dx * dx + dy * dy;
  };
  auto best_radius = [&](Real theta) {
    return grid_refine_min([&](Real rad) { return dist_at(theta, rad); }, 0.0L, r, 101);
  };
  const Real pi = std::acos(-1.0L);
  const Real theta = grid_refine_min(
      [&](Real th) { return dist_at(th, best_radius(th)); }, -pi, pi, 721);
  const Real rad = best_radius(theta);
  Vec z(2);
  z << static_cast<double>(rad * std::cos(theta)), static_cast<double>(rad * std::sin(theta));
  return z;
}

/// Central finite-difference gradient.
inline Vec fd_gradient(const FnN& f, const Vec& x, double h = 1e-6) {
  Vec g(x.size());
  Vec xp = x, xm = x;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    xp(j) = x(j) + h;
    xm(j) = x(j) - h;
    g(j) = (f(xp) - f(xm)) / (2.0 * h);
    xp(j) = x(j);
    xm(j) = x(j);
  }
  return g;
}

inline double relative_error(const Vec& a, const Vec& reference, double floor = 1e-8) {
  return (a - reference).norm() / std::max(reference.norm(), floor);
}

/// dist(0, g + mu z + lambda d||z||_1) by scanning the subgradient of |z_j|
/// over a grid of [-1, 1] at zero coordinates.
inline double l1_subdifferential_distance(const Vec& g, const Vec& z, double mu, double lambda) {
  double sq = 0.0;
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    const double base = g(j) + mu * z(j);
    double best;
    if (z(j) != 0.0) {
      best = std::abs(base + lambda * (z(j) > 0 ? 1.0 : -1.0));
    } else {
      const Real s = grid_refine_min([&](Real t) { return std::abs(base + lambda * t); }, -1.0L,
                                     1.0L, 2001);
      best = static_cast<double>(std::abs(base + lambda * s));
    }
    sq += best * best;
  }
  return std::sqrt(sq);
}

/// Root in (0,1) of (1 - a)/a^2 = 1/alpha^2 by bisection.
inline double alpha_root(double alpha) {
  const double target = 1.0 / (alpha * alpha);
  double lo = 1e-300, hi = 1.0;
  for (int it = 0; it < 2000 && hi - lo > 1e-17; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((1.0 - mid) / (mid * mid) > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline Vec random_vector(std::mt19937_64& gen, Eigen::Index n, double scale = 1.0) {
  std::normal_distribution<double> dist(0.0, scale);
  Vec v(n);
  for (Eigen::Index j = 0; j < n; ++j) v(j) = dist(gen);
  return v;
}

}  // namespace oracle
