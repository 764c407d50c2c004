#pragma once

#include "wdcat/bench/config.hpp"
#include "wdcat/objective.hpp"

#include <memory>
#include <optional>

namespace wdcat::bench {

struct ProblemInstance {
  std::shared_ptr<const CompositeObjective> objective;
  Vector x0;
  /// Optimal value when known in closed form.
  std::optional<double> f_star;
};

/// Builds the objective, its Lipschitz estimate and the starting point.
/// Deterministic in spec.data_seed.
ProblemInstance build_problem(const ProblemSpec& spec);

}  // namespace wdcat::bench
