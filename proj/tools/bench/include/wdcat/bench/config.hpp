#pragma once

#include "wdcat/catalyst.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace wdcat::bench {

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Flat `key = value` text, one key per line, `#` comments.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(std::istream& in, const std::string& origin = "<config>");
KeyValues load_key_values(const std::string& path);

enum class Wrapper { ConvexStep, NonconvexStep, CatalystBasic, CatalystAuto };

std::string to_string(Wrapper wrapper);
Wrapper parse_wrapper(const std::string& text);

/// Everything that defines the objective and the starting point.
struct ProblemSpec {
  std::string kind = "quadratic";  // quadratic | logistic | dictionary | nn
  std::string data;                // libsvm path (logistic, nn); synthetic when empty
  std::optional<Index> features;
  std::uint64_t data_seed = 1;
  Index samples = 100;  // n
  Index dim = 20;       // p (quadratic, synthetic classification)
  // quadratic
  double lipschitz = 2.0;
  double rho = 1.0;
  double radius = 1.0;
  double noise = 0.1;
  // logistic / nn synthetic data
  double spread = 1.0;
  double flip = 0.05;
  double l2 = 0.0;
  double l1 = 0.0;
  // dictionary
  Index signal_size = 16;  // m
  Index atoms = 8;         // p
  double lambda = 0.25;
  double mu = 1e-5;
  // nn
  Index hidden = 10;

  /// Canonical text of the problem-defining keys; equal iff same problem.
  std::string signature() const;
};

struct ExperimentConfig {
  ProblemSpec problem;
  Method method = Method::SVRG;
  Wrapper wrapper = Wrapper::CatalystAuto;
  Index epoch_length = 0;
  std::uint64_t budget = 0;  // component gradient evaluations
  std::uint64_t seed = 0;
  std::string out;
  double epsilon = 0.0;
  std::int64_t max_outer = 1000;

  // Catalyst overrides; problem-dependent defaults when unset.
  std::optional<double> kappa0;
  std::optional<double> kappa_cvx;
  std::optional<std::int64_t> T;
  std::optional<std::int64_t> S;
  bool use_logk = false;
  bool lazy_prox = false;
  double inner_tolerance = 0.0;
  int max_doublings = 60;

  /// Throws ConfigError on invalid combinations or a missing data file.
  void validate() const;
};

ExperimentConfig parse_experiment(const KeyValues& values);
ExperimentConfig load_experiment(const std::string& path);

}  // namespace wdcat::bench
