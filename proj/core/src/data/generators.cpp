#include "wdcat/data/generators.hpp"

#include "wdcat/rng.hpp"

#include <cmath>
#include <numbers>

namespace wdcat {

Matrix generate_patches(Index m, Index n, std::uint64_t seed) {
  if (m < 1 || n < 1) throw Error("generate_patches: m and n must be positive");
  const auto side = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(m))));
  const bool grid = side * side == m;
  const Index width = grid ? side : m;
  constexpr int kWaves = 4;
  constexpr double kNoise = 0.1;

  Matrix patches(m, n);
  for (Index j = 0; j < n; ++j) {
    Rng rng(seed, static_cast<std::uint64_t>(j));
    double amp[kWaves], fr[kWaves], fc[kWaves], phase[kWaves];
    const double max_freq = 3.0 * std::numbers::pi / static_cast<double>(width);
    for (int w = 0; w < kWaves; ++w) {
      amp[w] = rng.normal();
      fr[w] = rng.uniform(0.0, max_freq);
      fc[w] = grid ? rng.uniform(0.0, max_freq) : 0.0;
      phase[w] = rng.uniform(0.0, 2.0 * std::numbers::pi);
    }
    for (Index k = 0; k < m; ++k) {
      const double r = grid ? static_cast<double>(k % side) : static_cast<double>(k);
      const double c = grid ? static_cast<double>(k / side) : 0.0;
      double v = kNoise * rng.normal();
      for (int w = 0; w < kWaves; ++w) v += amp[w] * std::sin(fr[w] * r + fc[w] * c + phase[w]);
      patches(k, j) = v;
    }
    auto col = patches.col(j);
    col.array() -= col.mean();
    const double norm = col.norm();
    if (!(norm > 0.0)) throw Error("generate_patches: degenerate patch");
    col /= norm;
  }
  return patches;
}

QuadraticProblem generate_quadratic(Index p, double lipschitz, double rho, std::uint64_t seed,
                                    const QuadraticOptions& options) {
  if (p < 2) throw Error("generate_quadratic: p must be at least 2");
  if (!(lipschitz > 0.0)) throw Error("generate_quadratic: L must be positive");
  if (!(rho >= 0.0 && rho <= lipschitz)) throw Error("generate_quadratic: need 0 <= rho <= L");
  if (options.components < 1) throw Error("generate_quadratic: need at least one component");

  Rng rng(seed, 0x9a);
  Vector spectrum(p);
  spectrum[0] = -rho;
  spectrum[1] = lipschitz;
  for (Index j = 2; j < p; ++j) spectrum[j] = rng.uniform(-rho, lipschitz);

  Matrix basis = Matrix::Identity(p, p);
  if (!options.identity_conjugation) {
    Matrix gaussian(p, p);
    for (Index r = 0; r < p; ++r)
      for (Index c = 0; c < p; ++c) gaussian(r, c) = rng.normal();
    Eigen::HouseholderQR<Matrix> qr(gaussian);
    basis = qr.householderQ();
    const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index c = 0; c < p; ++c)
      if (R(c, c) < 0.0) basis.col(c) *= -1.0;
  }
  Matrix hessian = basis * spectrum.asDiagonal() * basis.transpose();
  hessian = 0.5 * (hessian + hessian.transpose()).eval();

  const Index n = options.components;
  Vector mean = options.linear.size() == p ? options.linear : Vector::Zero(p);
  if (options.linear.size() != 0 && options.linear.size() != p)
    throw Error("generate_quadratic: linear term has wrong size");
  Matrix linear(p, n);
  for (Index i = 0; i < n; ++i)
    for (Index r = 0; r < p; ++r) linear(r, i) = options.linear_noise * rng.normal();
  if (n > 1) linear.colwise() -= Vector(linear.rowwise().mean());
  else linear.setZero();
  linear.colwise() += mean;
  return QuadraticProblem(std::move(hessian), std::move(linear));
}

Dataset generate_classification(Index n, Index p, std::uint64_t seed, double spread, double flip) {
  if (n < 1 || p < 1) throw Error("generate_classification: n and p must be positive");
  if (!(spread >= 1.0)) throw Error("generate_classification: spread must be >= 1");
  if (!(flip >= 0.0 && flip < 0.5)) throw Error("generate_classification: flip must be in [0, 0.5)");
  Rng rng(seed, 0xc1a5);
  Vector scale(p);
  for (Index j = 0; j < p; ++j) {
    const double t = p > 1 ? static_cast<double>(j) / static_cast<double>(p - 1) : 0.0;
    scale[j] = std::pow(spread, -0.5 * t);
  }
  Vector truth(p);
  for (Index j = 0; j < p; ++j) truth[j] = rng.normal() / scale[j];

  Dataset data;
  data.features = p;
  data.rows.resize(static_cast<std::size_t>(n));
  data.labels.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    auto& row = data.rows[static_cast<std::size_t>(i)];
    row.reserve(static_cast<std::size_t>(p));
    double score = 0.0;
    for (Index j = 0; j < p; ++j) {
      const double v = scale[j] * rng.normal();
      row.push_back({j, v});
      score += v * truth[j];
    }
    double label = score >= 0.0 ? 1.0 : -1.0;
    if (rng.uniform() < flip) label = -label;
    data.labels[static_cast<std::size_t>(i)] = label;
  }
  return data;
}

}  // namespace wdcat
