#pragma once

#include "wdcat/types.hpp"

#include <Eigen/SparseCore>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wdcat {

struct Feature {
  Index index = 0;  // 0-based
  double value = 0.0;
  friend bool operator==(const Feature&, const Feature&) = default;
};

/// Labelled sparse samples. Labels are always -1 or +1.
struct Dataset {
  Index features = 0;
  std::vector<std::vector<Feature>> rows;
  std::vector<double> labels;

  Index size() const { return static_cast<Index>(rows.size()); }
  Eigen::SparseMatrix<double, Eigen::RowMajor> matrix() const;
  /// Dense p x n matrix, one sample per column.
  Matrix dense_columns() const;

  friend bool operator==(const Dataset&, const Dataset&) = default;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::string token, const std::string& reason);
  std::size_t line;
  std::string token;
};

/// Reads `<label> <idx>:<val> ...` lines with 1-based indices. Blank lines
/// are skipped and `#` starts a comment. Labels {0,1} and {1,2} are mapped
/// to {-1,+1}. `features` overrides the inferred dimension.
Dataset parse_libsvm(std::istream& in, std::optional<Index> features = std::nullopt);
Dataset load_libsvm(const std::string& path, std::optional<Index> features = std::nullopt);

void write_libsvm(std::ostream& out, const Dataset& data);

}  // namespace wdcat
