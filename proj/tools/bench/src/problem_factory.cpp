#include "wdcat/bench/problem_factory.hpp"

#include "wdcat/data/dataset.hpp"
#include "wdcat/data/generators.hpp"
#include "wdcat/problems/dictionary.hpp"
#include "wdcat/problems/logistic.hpp"
#include "wdcat/problems/quadratic.hpp"
#include "wdcat/problems/two_layer_net.hpp"
#include "wdcat/regularizers.hpp"
#include "wdcat/rng.hpp"

#include <algorithm>
#include <numeric>

namespace wdcat::bench {

namespace {

ProblemInstance quadratic_instance(const ProblemSpec& spec) {
  QuadraticOptions opts;
  opts.components = spec.samples;
  opts.linear_noise = spec.noise;
  auto smooth = std::make_shared<QuadraticProblem>(
      generate_quadratic(spec.dim, spec.lipschitz, spec.rho, spec.data_seed, opts));
  auto ball = std::make_shared<ColumnBallIndicator>(spec.dim, spec.radius);
  const double lambda_min = smooth->eigenvalues().minCoeff();

  ProblemInstance out;
  out.objective = std::make_shared<CompositeObjective>(smooth, ball, smooth->lipschitz(),
                                                       smooth->weak_convexity());
  out.f_star = 0.5 * std::min(lambda_min, 0.0) * spec.radius * spec.radius;
  Rng rng(spec.data_seed, 7);
  Vector x0(spec.dim);
  for (Index j = 0; j < spec.dim; ++j) x0(j) = rng.normal();
  out.x0 = 0.5 * spec.radius * x0 / x0.norm();
  return out;
}

Dataset classification_data(const ProblemSpec& spec) {
  if (!spec.data.empty()) return load_libsvm(spec.data, spec.features);
  return generate_classification(spec.samples, spec.dim, spec.data_seed, spec.spread, spec.flip);
}

ProblemInstance logistic_instance(const ProblemSpec& spec) {
  auto smooth = std::make_shared<LogisticProblem>(classification_data(spec), spec.l2);
  std::shared_ptr<const Regularizer> reg;
  if (spec.l1 > 0.0)
    reg = std::make_shared<ElasticNetRegularizer>(0.0, spec.l1);
  else
    reg = std::make_shared<ZeroRegularizer>();
  ProblemInstance out;
  out.objective =
      std::make_shared<CompositeObjective>(smooth, reg, smooth->lipschitz(), 0.0);
  out.x0 = Vector::Zero(smooth->dimension());
  return out;
}

ProblemInstance dictionary_instance(const ProblemSpec& spec) {
  Matrix signals = generate_patches(spec.signal_size, spec.samples, spec.data_seed);
  if (spec.atoms > spec.samples) throw ConfigError("dictionary: atoms must not exceed n");

  std::vector<Index> order(static_cast<std::size_t>(spec.samples));
  std::iota(order.begin(), order.end(), Index{0});
  Rng rng(spec.data_seed, 11);
  for (Index i = spec.samples - 1; i > 0; --i)
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(rng.index(static_cast<std::uint64_t>(i + 1)))]);
  Matrix d0(spec.signal_size, spec.atoms);
  for (Index j = 0; j < spec.atoms; ++j) d0.col(j) = signals.col(order[static_cast<std::size_t>(j)]);
  d0 = project_dictionary(d0);

  auto smooth = std::make_shared<DictionaryProblem>(std::move(signals), spec.atoms, spec.mu,
                                                    spec.lambda);
  const double lipschitz = std::max(estimate_L_dictionary(*smooth, d0), kLipschitzFloor);
  ProblemInstance out;
  out.x0 = smooth->to_vector(d0);
  out.objective = std::make_shared<CompositeObjective>(
      smooth, std::make_shared<ColumnBallIndicator>(spec.signal_size, 1.0), lipschitz);
  return out;
}

ProblemInstance nn_instance(const ProblemSpec& spec) {
  auto smooth = std::make_shared<TwoLayerNetProblem>(classification_data(spec), spec.hidden);
  const LayerLipschitz layers = estimate_L_nn(*smooth, spec.data_seed);
  const double lipschitz = std::max({layers.first, layers.second, kLipschitzFloor});
  std::shared_ptr<const Regularizer> reg;
  if (spec.l2 > 0.0 || spec.l1 > 0.0)
    reg = std::make_shared<ElasticNetRegularizer>(spec.l2, spec.l1);
  else
    reg = std::make_shared<ZeroRegularizer>();
  ProblemInstance out;
  out.x0 = smooth->initial_weights(spec.data_seed);
  out.objective = std::make_shared<CompositeObjective>(smooth, reg, lipschitz);
  return out;
}

}  // namespace

ProblemInstance build_problem(const ProblemSpec& spec) {
  if (spec.kind == "quadratic") return quadratic_instance(spec);
  if (spec.kind == "logistic") return logistic_instance(spec);
  if (spec.kind == "dictionary") return dictionary_instance(spec);
  if (spec.kind == "nn") return nn_instance(spec);
  throw ConfigError("unknown problem '" + spec.kind + "'");
}

}  // namespace wdcat::bench
