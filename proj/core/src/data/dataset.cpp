#include "wdcat/data/dataset.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string_view>

namespace wdcat {

namespace {

std::string describe(std::size_t line, const std::string& token, const std::string& reason) {
  std::ostringstream msg;
  msg << "libsvm parse error at line " << line << ": " << reason;
  if (!token.empty()) msg << " (token '" << token << "')";
  return msg.str();
}

bool parse_double(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool parse_index(std::string_view text, long long& out) {
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

ParseError::ParseError(std::size_t line_, std::string token_, const std::string& reason)
    : Error(describe(line_, token_, reason)), line(line_), token(std::move(token_)) {}

Eigen::SparseMatrix<double, Eigen::RowMajor> Dataset::matrix() const {
  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const Feature& f : rows[i])
      triplets.emplace_back(static_cast<Index>(i), f.index, f.value);
  Eigen::SparseMatrix<double, Eigen::RowMajor> out(size(), features);
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

Matrix Dataset::dense_columns() const {
  Matrix out = Matrix::Zero(features, size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const Feature& f : rows[i]) out(f.index, static_cast<Index>(i)) = f.value;
  return out;
}

Dataset parse_libsvm(std::istream& in, std::optional<Index> features) {
  Dataset data;
  std::vector<std::size_t> line_of_row;
  std::string line;
  std::size_t lineno = 0;
  Index max_index = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;

    double label = 0.0;
    if (!parse_double(token, label)) throw ParseError(lineno, token, "label is not a number");

    std::vector<Feature> row;
    long long previous = 0;
    while (tokens >> token) {
      const auto colon = token.find(':');
      if (colon == std::string::npos) throw ParseError(lineno, token, "expected <index>:<value>");
      long long index = 0;
      double value = 0.0;
      if (!parse_index(std::string_view(token).substr(0, colon), index))
        throw ParseError(lineno, token, "index is not an integer");
      if (!parse_double(std::string_view(token).substr(colon + 1), value))
        throw ParseError(lineno, token, "value is not a number");
      if (index < 1) throw ParseError(lineno, token, "indices are 1-based");
      if (index <= previous) throw ParseError(lineno, token, "indices must be strictly increasing");
      previous = index;
      row.push_back({static_cast<Index>(index - 1), value});
      max_index = std::max<Index>(max_index, static_cast<Index>(index));
    }
    data.rows.push_back(std::move(row));
    data.labels.push_back(label);
    line_of_row.push_back(lineno);
  }
  if (data.rows.empty()) throw ParseError(lineno, "", "input contains no samples");

  const std::set<double> distinct(data.labels.begin(), data.labels.end());
  auto subset_of = [&](std::initializer_list<double> allowed) {
    const std::set<double> a(allowed);
    return std::all_of(distinct.begin(), distinct.end(), [&](double v) { return a.count(v) > 0; });
  };
  if (subset_of({-1.0, 1.0})) {
    // already normalized
  } else if (subset_of({0.0, 1.0})) {
    for (double& l : data.labels) l = l == 0.0 ? -1.0 : 1.0;
  } else if (subset_of({1.0, 2.0})) {
    for (double& l : data.labels) l = l == 1.0 ? -1.0 : 1.0;
  } else {
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
      const double l = data.labels[i];
      if (l != -1.0 && l != 1.0)
        throw ParseError(line_of_row[i], std::to_string(l),
                         "labels must be {-1,+1}, {0,1} or {1,2}");
    }
  }

  if (features) {
    if (*features < max_index)
      throw ParseError(lineno, std::to_string(*features),
                       "feature override is smaller than the largest index " +
                           std::to_string(max_index));
    data.features = *features;
  } else {
    data.features = max_index;
  }
  return data;
}

Dataset load_libsvm(const std::string& path, std::optional<Index> features) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open dataset '" + path + "'");
  return parse_libsvm(in, features);
}

void write_libsvm(std::ostream& out, const Dataset& data) {
  char buffer[64];
  for (std::size_t i = 0; i < data.rows.size(); ++i) {
    out << (data.labels[i] > 0 ? "+1" : "-1");
    for (const Feature& f : data.rows[i]) {
      const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), f.value);
      out << ' ' << (f.index + 1) << ':' << std::string_view(buffer, static_cast<std::size_t>(ptr - buffer));
    }
    out << '\n';
  }
}

}  // namespace wdcat
