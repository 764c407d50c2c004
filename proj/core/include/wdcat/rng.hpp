#pragma once

#include <cstdint>

namespace wdcat {

/// Counter-based generator: the i-th output is a bijective mix of
/// (key, i), so streams can be split by deriving new keys and results do
/// not depend on platform distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal (Box-Muller, one value per call).
  double normal();
  /// Uniform on {0, ..., n-1}, unbiased.
  std::uint64_t index(std::uint64_t n);

  Rng split(std::uint64_t stream) const { return Rng(key_, stream); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x);

/// Derives an independent seed from a base seed and a tuple of tags.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

}  // namespace wdcat
