#pragma once

#include "wdcat/objective.hpp"

namespace wdcat {

struct SparseCodingOptions {
  double tolerance = 1e-9;
  int max_sweeps = 10000;
};

/// Result of the elastic-net coding problem
///   min_a 1/2 ||x - D a||^2 + (mu/2)||a||^2 + lambda ||a||_1.
struct SparseCode {
  Vector alpha;
  double objective = 0.0;
  int sweeps = 0;
};

/// Cyclic coordinate descent from `start` (zeros when empty). Stops when the
/// largest coordinate change of a sweep falls below the tolerance; throws
/// Error when max_sweeps is exhausted.
SparseCode solve_sparse_code(const Eigen::Ref<const Matrix>& dictionary,
                             const Eigen::Ref<const Vector>& signal,
                             double mu, double lambda, const SparseCodingOptions& options = {},
                             const Vector& start = Vector());

/// Projection onto matrices whose columns lie in the unit l2 ball.
Matrix project_dictionary(const Matrix& dictionary);

/// Dictionary learning in finite-sum form: the variable is vec(D) for an
/// m x p dictionary D (column-major) and
///   f_i(D) = min_a 1/2 ||x_i - D a||^2 + (mu/2)||a||^2 + lambda ||a||_1.
/// Gradients follow Danskin's rule: grad f_i(D) = -(x_i - D a_i) a_i^T.
class DictionaryProblem final : public SmoothFiniteSum {
 public:
  DictionaryProblem(Matrix signals, Index atoms, double mu, double lambda,
                    SparseCodingOptions options = {});

  Index dimension() const override { return signals_.rows() * atoms_; }
  Index size() const override { return signals_.cols(); }

  double component_value(Index i, const Vector& x) const override;
  void component_gradient(Index i, const Vector& x, Vector& grad) const override;

  SparseCode code(Index i, const Matrix& dictionary, const Vector& start = Vector()) const;
  Matrix component_gradient_matrix(Index i, const Matrix& dictionary) const;

  Matrix to_matrix(const Vector& x) const;
  Vector to_vector(const Matrix& dictionary) const;

  Index signal_size() const { return signals_.rows(); }
  Index atoms() const { return atoms_; }
  double mu() const { return mu_; }
  double lambda() const { return lambda_; }
  const Matrix& signals() const { return signals_; }

 private:
  Matrix signals_;
  Index atoms_;
  double mu_;
  double lambda_;
  SparseCodingOptions options_;
};

/// Lower bound substituted for degenerate Lipschitz estimates.
inline constexpr double kLipschitzFloor = 1e-8;

/// max_i ||a_i(D0)||^2, the smoothness of the components with the codes
/// frozen at D0. Not floored; callers apply kLipschitzFloor.
double estimate_L_dictionary(const DictionaryProblem& problem, const Matrix& dictionary);

}  // namespace wdcat
