#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wdcat {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Oracle call accounting for one run. Each field counts component-level
/// calls, so a full gradient of an n-term finite sum adds n to `gradients`.
struct EvalCounters {
  std::uint64_t values = 0;
  std::uint64_t gradients = 0;
  std::uint64_t prox = 0;

  EvalCounters& operator+=(const EvalCounters& other) {
    values += other.values;
    gradients += other.gradients;
    prox += other.prox;
    return *this;
  }
  friend EvalCounters operator+(EvalCounters a, const EvalCounters& b) { return a += b; }
  friend bool operator==(const EvalCounters&, const EvalCounters&) = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an oracle returns a non-finite value where a finite one is required.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

inline bool all_finite(const Vector& x) { return x.allFinite(); }

}  // namespace wdcat
