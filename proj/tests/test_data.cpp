#include "oracles.hpp"

#include "wdcat/data/dataset.hpp"
#include "wdcat/data/generators.hpp"

#include <doctest.h>

#include <sstream>

using namespace wdcat;

namespace {

Dataset parse(const std::string& text, std::optional<Index> features = std::nullopt) {
  std::istringstream in(text);
  return parse_libsvm(in, features);
}

void check_parse_error(const std::string& text, std::size_t line, const std::string& token) {
  try {
    parse(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == line);
    CHECK(e.token == token);
  }
}

}  // namespace

TEST_CASE("libsvm parsing") {
  const Dataset d = parse("+1 1:0.5 3:-2\n");
  CHECK(d.size() == 1);
  CHECK(d.features == 3);
  CHECK(d.labels == std::vector<double>{1.0});
  CHECK(d.rows[0] == std::vector<Feature>{{0, 0.5}, {2, -2.0}});

  const Dataset blanks = parse("\n-1 2:1\n\n  \n+1 1:3 # trailing comment\n# whole line\n");
  CHECK(blanks.size() == 2);
  CHECK(blanks.labels == std::vector<double>{-1.0, 1.0});
  CHECK(blanks.features == 2);

  const Dataset empty_row = parse("-1\n+1 4:1\n");
  CHECK(empty_row.rows[0].empty());
  CHECK(empty_row.features == 4);

  const Dataset wide = parse("+1 1:1\n-1 2:1\n", Index{10});
  CHECK(wide.features == 10);
  CHECK(wide.matrix().cols() == 10);
  CHECK(wide.dense_columns().rows() == 10);
  CHECK(wide.dense_columns()(1, 1) == 1.0);
}

TEST_CASE("libsvm parse errors") {
  check_parse_error("1 2:abc\n", 1, "2:abc");
  check_parse_error("+1 1:1\n-1 3:1 2:1\n", 2, "2:1");
  check_parse_error("+1 1:1 1:2\n", 1, "1:2");
  check_parse_error("+1 0:1\n", 1, "0:1");
  check_parse_error("+1 1:1\nx 1:1\n", 2, "x");
  check_parse_error("+1 1;1\n", 1, "1;1");
  check_parse_error("+1 1.5:1\n", 1, "1.5:1");
  check_parse_error("3 1:1\n-1 1:1\n", 1, std::to_string(3.0));
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("\n# nothing\n"), ParseError);
  CHECK_THROWS_AS(parse("+1 5:1\n", Index{3}), ParseError);
  CHECK_THROWS_AS(load_libsvm("/nonexistent/file.svm"), Error);
}

TEST_CASE("libsvm label mapping") {
  CHECK(parse("0 1:1\n1 1:2\n").labels == std::vector<double>{-1.0, 1.0});
  CHECK(parse("1 1:1\n2 1:2\n").labels == std::vector<double>{-1.0, 1.0});
  CHECK(parse("-1 1:1\n1 1:2\n").labels == std::vector<double>{-1.0, 1.0});
  CHECK(parse("1 1:1\n1 1:2\n").labels == std::vector<double>{1.0, 1.0});
}

TEST_CASE("libsvm round trip") {
  std::mt19937_64 gen(3);
  std::uniform_int_distribution<int> rows_dist(1, 20), width(1, 30), coin(0, 1);
  std::normal_distribution<double> value(0.0, 10.0);
  for (int file = 0; file < 50; ++file) {
    Dataset d;
    const int n = rows_dist(gen);
    const int p = width(gen);
    d.features = p;
    for (int i = 0; i < n; ++i) {
      std::vector<Feature> row;
      for (Index j = 0; j < p; ++j)
        if (coin(gen)) row.push_back({j, value(gen)});
      d.rows.push_back(row);
      d.labels.push_back(coin(gen) ? 1.0 : -1.0);
    }
    // Dimension must be recoverable from the text alone.
    d.rows[0].push_back({p - 1, 1.25});
    if (d.rows[0].size() > 1 && d.rows[0][d.rows[0].size() - 2].index == p - 1)
      d.rows[0].pop_back();
    d.labels[0] = 1.0;
    if (n > 1) d.labels[1] = -1.0;

    std::ostringstream out;
    write_libsvm(out, d);
    CHECK(parse(out.str()) == d);
  }
}

TEST_CASE("patch generator") {
  const Matrix a = generate_patches(64, 30, 5);
  CHECK(a.rows() == 64);
  CHECK(a.cols() == 30);
  for (Index i = 0; i < a.cols(); ++i) {
    CHECK(std::abs(a.col(i).mean()) < 1e-12);
    CHECK(std::abs(a.col(i).norm() - 1.0) < 1e-12);
  }
  CHECK(generate_patches(64, 30, 5) == a);
  CHECK(generate_patches(64, 30, 6) != a);
  const Matrix line = generate_patches(10, 4, 1);
  CHECK(std::abs(line.col(3).norm() - 1.0) < 1e-12);
}

TEST_CASE("quadratic generator") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const QuadraticProblem q = generate_quadratic(6, 3.0, 1.5, seed);
    const Vector e = q.eigenvalues();
    CHECK(std::abs(e.minCoeff() + 1.5) < 1e-12);
    CHECK(std::abs(e.maxCoeff() - 3.0) < 1e-12);
    CHECK(q.hessian().isApprox(q.hessian().transpose(), 0.0));
  }
  const QuadraticProblem convex = generate_quadratic(4, 2.0, 0.0, 1);
  CHECK(convex.eigenvalues().minCoeff() >= -1e-12);
  CHECK(convex.weak_convexity() < 1e-12);

  QuadraticOptions diag;
  diag.identity_conjugation = true;
  const QuadraticProblem two = generate_quadratic(2, 2.0, 1.0, 9, diag);
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = -1.0;
  expected(1, 1) = 2.0;
  CHECK(two.hessian() == expected);

  QuadraticOptions many;
  many.components = 7;
  many.linear_noise = 2.0;
  many.linear = Vector::Constant(5, 0.3);
  const QuadraticProblem sum = generate_quadratic(5, 1.0, 0.5, 2, many);
  CHECK(sum.size() == 7);
  CHECK(sum.linear().isApprox(many.linear, 1e-12));
  std::mt19937_64 gen(4);
  const Vector x = oracle::random_vector(gen, 5);
  double mean = 0.0;
  for (Index i = 0; i < 7; ++i) mean += sum.component_value(i, x) / 7.0;
  CHECK(sum.value(x) == doctest::Approx(mean).epsilon(1e-12));
  Vector g0, g1;
  sum.component_gradient(0, x, g0);
  sum.component_gradient(1, x, g1);
  CHECK(!g0.isApprox(g1));

  CHECK(generate_quadratic(5, 1.0, 0.5, 2, many).hessian() == sum.hessian());
  CHECK_THROWS_AS(generate_quadratic(1, 1.0, 0.5, 2), Error);
  CHECK_THROWS_AS(generate_quadratic(3, 1.0, 2.0, 2), Error);
  CHECK_THROWS_AS(generate_quadratic(3, 0.0, 0.0, 2), Error);
  CHECK_THROWS_AS(generate_quadratic(3, 1.0, -0.1, 2), Error);
}

TEST_CASE("classification generator") {
  const Dataset a = generate_classification(50, 8, 3, 100.0, 0.1);
  CHECK(a == generate_classification(50, 8, 3, 100.0, 0.1));
  CHECK(a != generate_classification(50, 8, 4, 100.0, 0.1));
  CHECK(a.size() == 50);
  CHECK(a.features == 8);
  int positives = 0;
  for (double l : a.labels) {
    CHECK((l == 1.0 || l == -1.0));
    positives += l > 0;
  }
  CHECK(positives > 0);
  CHECK(positives < 50);
  const Matrix x = a.dense_columns();
  CHECK(x.row(0).norm() > x.row(7).norm());
}
