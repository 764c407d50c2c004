#pragma once

#include "wdcat/data/dataset.hpp"
#include "wdcat/problems/quadratic.hpp"

#include <cstdint>

namespace wdcat {

/// n signals of size m (columns). Each is a sum of random low-frequency
/// sinusoids on a sqrt(m) x sqrt(m) grid (a 1-D grid when m is not a
/// square) plus noise, then centered and scaled to unit l2 norm.
Matrix generate_patches(Index m, Index n, std::uint64_t seed);

struct QuadraticOptions {
  /// Number of components; they share Q and differ in their linear terms.
  Index components = 1;
  /// Scale of the zero-mean per-component linear perturbations.
  double linear_noise = 0.0;
  /// Mean linear term b; zero when empty.
  Vector linear;
  /// Skip the random rotation so Q is diagonal.
  bool identity_conjugation = false;
};

/// Q = U diag(s) U^T with s spanning [-rho, L], both endpoints attained, and
/// U a random orthogonal matrix. Requires p >= 2, L > 0, 0 <= rho <= L.
QuadraticProblem generate_quadratic(Index p, double lipschitz, double rho, std::uint64_t seed,
                                    const QuadraticOptions& options = {});

/// Synthetic binary classification set with dense Gaussian features whose
/// scales decay geometrically from 1 to 1/sqrt(spread); labels from a
/// random linear rule with `flip` probability of label noise.
Dataset generate_classification(Index n, Index p, std::uint64_t seed, double spread = 1.0,
                                double flip = 0.05);

}  // namespace wdcat
