#include "wdcat/problems/dictionary.hpp"

#include "wdcat/regularizers.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace wdcat {

SparseCode solve_sparse_code(const Eigen::Ref<const Matrix>& dictionary,
                             const Eigen::Ref<const Vector>& signal, double mu, double lambda,
                             const SparseCodingOptions& options, const Vector& start) {
  const Index p = dictionary.cols();
  if (signal.size() != dictionary.rows()) throw Error("sparse code: signal size mismatch");
  if (mu < 0.0 || lambda < 0.0) throw Error("sparse code: mu and lambda must be non-negative");

  SparseCode out;
  out.alpha = start.size() == p ? start : Vector::Zero(p);
  const Vector col_sq = dictionary.colwise().squaredNorm().transpose();
  Vector residual = signal - dictionary * out.alpha;

  for (int sweep = 1; sweep <= options.max_sweeps; ++sweep) {
    double max_change = 0.0;
    for (Index j = 0; j < p; ++j) {
      const double old = out.alpha[j];
      const double denom = col_sq[j] + mu;
      double updated = 0.0;
      if (denom > 0.0) {
        const double rho = dictionary.col(j).dot(residual) + col_sq[j] * old;
        updated = soft_threshold(rho, lambda) / denom;
      }
      const double change = updated - old;
      if (change != 0.0) {
        residual.noalias() -= change * dictionary.col(j);
        out.alpha[j] = updated;
        max_change = std::max(max_change, std::abs(change));
      }
    }
    if (max_change < options.tolerance) {
      out.sweeps = sweep;
      residual = signal - dictionary * out.alpha;
      out.objective = 0.5 * residual.squaredNorm() + 0.5 * mu * out.alpha.squaredNorm() +
                      lambda * out.alpha.lpNorm<1>();
      return out;
    }
  }
  throw Error("sparse code: coordinate descent did not converge within " +
              std::to_string(options.max_sweeps) + " sweeps");
}

Matrix project_dictionary(const Matrix& dictionary) {
  Matrix out = dictionary;
  for (Index j = 0; j < out.cols(); ++j) {
    const double norm = out.col(j).norm();
    if (norm > 1.0) out.col(j) /= norm;
  }
  return out;
}

DictionaryProblem::DictionaryProblem(Matrix signals, Index atoms, double mu, double lambda,
                                     SparseCodingOptions options)
    : signals_(std::move(signals)), atoms_(atoms), mu_(mu), lambda_(lambda), options_(options) {
  if (signals_.rows() < 1 || signals_.cols() < 1) throw Error("DictionaryProblem: empty data");
  if (atoms_ < 1) throw Error("DictionaryProblem: need at least one atom");
  if (mu_ < 0.0 || lambda_ < 0.0) throw Error("DictionaryProblem: mu and lambda must be non-negative");
}

Matrix DictionaryProblem::to_matrix(const Vector& x) const {
  if (x.size() != dimension()) throw Error("DictionaryProblem: variable size mismatch");
  return Eigen::Map<const Matrix>(x.data(), signals_.rows(), atoms_);
}

Vector DictionaryProblem::to_vector(const Matrix& dictionary) const {
  if (dictionary.rows() != signals_.rows() || dictionary.cols() != atoms_)
    throw Error("DictionaryProblem: dictionary shape mismatch");
  return Eigen::Map<const Vector>(dictionary.data(), dictionary.size());
}

SparseCode DictionaryProblem::code(Index i, const Matrix& dictionary, const Vector& start) const {
  return solve_sparse_code(dictionary, signals_.col(i), mu_, lambda_, options_, start);
}

Matrix DictionaryProblem::component_gradient_matrix(Index i, const Matrix& dictionary) const {
  const SparseCode c = code(i, dictionary);
  const Vector residual = signals_.col(i) - dictionary * c.alpha;
  return -residual * c.alpha.transpose();
}

double DictionaryProblem::component_value(Index i, const Vector& x) const {
  Eigen::Map<const Matrix> d(x.data(), signals_.rows(), atoms_);
  return solve_sparse_code(d, signals_.col(i), mu_, lambda_, options_).objective;
}

void DictionaryProblem::component_gradient(Index i, const Vector& x, Vector& grad) const {
  Eigen::Map<const Matrix> d(x.data(), signals_.rows(), atoms_);
  const SparseCode c = solve_sparse_code(d, signals_.col(i), mu_, lambda_, options_);
  const Vector residual = signals_.col(i) - d * c.alpha;
  grad.resize(dimension());
  Eigen::Map<Matrix>(grad.data(), signals_.rows(), atoms_).noalias() =
      -residual * c.alpha.transpose();
}

double estimate_L_dictionary(const DictionaryProblem& problem, const Matrix& dictionary) {
  double best = 0.0;
  for (Index i = 0; i < problem.size(); ++i)
    best = std::max(best, problem.code(i, dictionary).alpha.squaredNorm());
  return best;
}

}  // namespace wdcat
