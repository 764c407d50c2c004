#include "fixtures.hpp"
#include "oracles.hpp"

#include "wdcat/solvers.hpp"
#include "wdcat/stationarity.hpp"
#include "wdcat/subproblem.hpp"

#include <doctest.h>

#include <cmath>

using namespace wdcat;
using fixtures::vec;

namespace {

std::shared_ptr<const fixtures::LeastSquares> random_least_squares(std::uint64_t seed, Index p,
                                                                   Index n) {
  std::mt19937_64 gen(seed);
  Matrix a(p, n);
  for (Index i = 0; i < n; ++i) a.col(i) = oracle::random_vector(gen, p);
  return std::make_shared<fixtures::LeastSquares>(a, oracle::random_vector(gen, n));
}

struct Fit {
  double slope = 0.0;
  double r2 = 0.0;
};

Fit linear_fit(const std::vector<double>& t, const std::vector<double>& y) {
  const auto m = static_cast<double>(t.size());
  double st = 0, sy = 0, stt = 0, sty = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    st += t[i];
    sy += y[i];
    stt += t[i] * t[i];
    sty += t[i] * y[i];
  }
  Fit fit;
  fit.slope = (m * sty - st * sy) / (m * stt - st * st);
  const double intercept = (sy - fit.slope * st) / m;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double pred = intercept + fit.slope * t[i];
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - sy / m) * (y[i] - sy / m);
  }
  fit.r2 = 1.0 - ss_res / ss_tot;
  return fit;
}

}  // namespace

TEST_CASE("method names round-trip") {
  for (Method m : {Method::GD, Method::SVRG, Method::SAGA}) CHECK(parse_method(to_string(m)) == m);
  CHECK(parse_method("svrg") == Method::SVRG);
  CHECK_THROWS_AS(parse_method("adam"), Error);
}

TEST_CASE("solver kind validation") {
  SolverKind kind;
  kind.step = 0.0;
  CHECK_THROWS_AS(kind.validate(), Error);
  kind.step = 0.1;
  kind.epoch_length = -1;
  CHECK_THROWS_AS(kind.validate(), Error);
  kind.epoch_length = 5;
  CHECK_NOTHROW(kind.validate());
}

TEST_CASE("default stepsizes") {
  CHECK(default_step(Method::GD, 4.0) == doctest::Approx(0.25));
  CHECK(default_step(Method::SVRG, 4.0) == doctest::Approx(0.125));
  CHECK(default_step(Method::SAGA, 4.0) == doctest::Approx(0.125));
}

TEST_CASE("method constants") {
  const MethodConstants gd = method_constants(Method::GD, 1.0, 1);
  CHECK(gd.inv_tau_L == 2.0);
  CHECK(gd.kappa_cvx == 1.0);
  CHECK(gd.inv_tau_cvx == 2.0);
  CHECK(gd.a_4L == 8.0);

  const MethodConstants svrg = method_constants(Method::SVRG, 2.0, 100);
  CHECK(svrg.inv_tau_L == 102.0);
  CHECK(svrg.kappa_cvx == 2.0 / 99.0);
  CHECK(svrg.inv_tau_cvx == 200.0);
  CHECK(svrg.a_4L == 16.0);

  const MethodConstants saga = method_constants(Method::SAGA, 1.0, 10);
  CHECK(saga.inv_tau_L == 40.0);
  CHECK(saga.kappa_cvx == 3.0 / 37.0);
  CHECK(saga.inv_tau_cvx == 40.0);
  CHECK(saga.a_4L == 80.0);

  const MethodConstants single = method_constants(Method::SVRG, 3.0, 1);
  CHECK(single.inv_tau_L == 2.0);
  CHECK(single.kappa_cvx == 3.0);
  CHECK(single.a_4L == 24.0);
  CHECK(gd.tau_L() == 0.5);

  CHECK_THROWS_AS(method_constants(Method::GD, 1.0, 0), Error);
  CHECK_THROWS_AS(method_constants(Method::SAGA, 0.0, 5), Error);
}

TEST_CASE("warm start examples") {
  const auto smooth = fixtures::scalar(1.0, fixtures::no_reg(), 1.0);
  CHECK(warm_start(ProxSubproblem(smooth, vec({3.0}), 1.0))(0) == 3.0);

  const auto l1 = fixtures::quadratic(Matrix::Zero(2, 2), Vector::Zero(2),
                                      std::make_shared<ElasticNetRegularizer>(0.0, 0.25), 1.0);
  EvalCounters c;
  const Vector z = warm_start(ProxSubproblem(l1, vec({1.0, 0.1}), 1.0), c);
  const double ref = oracle::scalar_prox([](oracle::Real t) { return 0.25L * std::abs(t); }, 1.0, 0.5);
  CHECK(z(0) == doctest::Approx(0.875));
  CHECK(std::abs(z(0) - ref) < 1e-10);
  CHECK(z(1) == 0.0);
  CHECK(c.gradients == 1);
  CHECK(c.prox == 1);

  const auto ball = fixtures::quadratic(Matrix::Identity(2, 2), Vector::Zero(2),
                                        std::make_shared<ColumnBallIndicator>(2, 1.0), 1.0);
  const Vector zb = warm_start(ProxSubproblem(ball, vec({3.0, 0.0}), 1.0));
  const Vector refb = oracle::disk_projection(vec({1.5, 0.0}), 1.0);
  CHECK(zb(0) == doctest::Approx(1.0));
  CHECK(zb(1) == doctest::Approx(0.0));
  CHECK((zb - refb).norm() < 1e-8);
}

TEST_CASE("run_inner basics") {
  const auto obj = fixtures::scalar(1.0, fixtures::no_reg(), 1.0);
  const ProxSubproblem sub(obj, vec({0.0}), 1.0);
  SolverKind gd{Method::GD, 0, std::nullopt};
  const InnerRunResult empty = run_inner(gd, sub, vec({1.0}), 0, 0);
  CHECK(empty.z(0) == 1.0);
  CHECK(empty.iterations == 0);
  CHECK(empty.evals == EvalCounters{});

  const InnerRunResult one = run_inner(gd, sub, vec({1.0}), 1, 0);
  CHECK(one.z(0) == doctest::Approx(0.0));
  CHECK(one.iterations == 1);

  CHECK_THROWS_AS(run_inner(gd, sub, vec({1.0}), -1, 0), Error);
}

TEST_CASE("GD contracts each eigenmode exactly") {
  const Vector d = vec({0.5, 1.0, 2.0, 3.0});
  const auto obj = fixtures::quadratic(d.asDiagonal(), Vector::Zero(4), fixtures::no_reg(), 3.0);
  const double kappa = 0.5;
  const ProxSubproblem sub(obj, Vector::Zero(4), kappa);
  const Vector z0 = vec({1.0, -2.0, 0.5, 3.0});
  const double eta = 1.0 / (3.0 + kappa);
  for (std::int64_t t : {1, 5, 17}) {
    const InnerRunResult r = run_inner(SolverKind{Method::GD, 0, std::nullopt}, sub, z0, t, 0);
    for (Index j = 0; j < 4; ++j) {
      const double expected = std::pow(1.0 - eta * (d(j) + kappa), static_cast<double>(t)) * z0(j);
      CHECK(r.z(j) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("evaluation counters follow the method accounting") {
  auto ls = random_least_squares(3, 4, 10);
  const CompositeObjective obj(ls, std::make_shared<ElasticNetRegularizer>(0.0, 0.01), ls->lipschitz());
  const ProxSubproblem sub(obj, Vector::Zero(4), 0.3);
  const Vector z0 = Vector::Ones(4);
  for (std::int64_t t : {1, 9, 10, 11, 35}) {
    const auto ut = static_cast<std::uint64_t>(t);
    const InnerRunResult gd = run_inner({Method::GD, 0, std::nullopt}, sub, z0, t, 1);
    CHECK(gd.evals.gradients == 10 * ut);
    CHECK(gd.evals.prox == ut);

    const InnerRunResult svrg = run_inner({Method::SVRG, 0, std::nullopt}, sub, z0, t, 1);
    CHECK(svrg.evals.gradients == 10 * ((ut + 9) / 10) + 2 * ut);
    CHECK(svrg.evals.prox == ut);

    const InnerRunResult svrg4 = run_inner({Method::SVRG, 4, std::nullopt}, sub, z0, t, 1);
    CHECK(svrg4.evals.gradients == 10 * ((ut + 3) / 4) + 2 * ut);

    const InnerRunResult saga = run_inner({Method::SAGA, 0, std::nullopt}, sub, z0, t, 1);
    CHECK(saga.evals.gradients == 10 + ut);
    CHECK(saga.evals.prox == ut);
    CHECK(saga.evals.values == 0);
  }
}

TEST_CASE("stochastic runs are reproducible") {
  auto ls = random_least_squares(4, 5, 20);
  const CompositeObjective obj(ls, fixtures::no_reg(), ls->lipschitz());
  const ProxSubproblem sub(obj, Vector::Ones(5), 0.2);
  for (Method m : {Method::SVRG, Method::SAGA}) {
    const SolverKind kind{m, 0, std::nullopt};
    const InnerRunResult a = run_inner(kind, sub, Vector::Zero(5), 57, 99);
    const InnerRunResult b = run_inner(kind, sub, Vector::Zero(5), 57, 99);
    const InnerRunResult c = run_inner(kind, sub, Vector::Zero(5), 57, 100);
    CHECK(a.z == b.z);
    CHECK(a.evals == b.evals);
    CHECK(a.z != c.z);
  }
}

TEST_CASE("resumed runs equal single runs") {
  auto ls = random_least_squares(5, 3, 8);
  const CompositeObjective obj(ls, fixtures::no_reg(), ls->lipschitz());
  for (Method m : {Method::GD, Method::SVRG, Method::SAGA}) {
    const SolverKind kind{m, 0, std::nullopt};
    MethodRun whole(kind, obj, Vector::Zero(3), 0.4, 0.05, Vector::Ones(3), 7);
    whole.advance(23);
    MethodRun pieces(kind, obj, Vector::Zero(3), 0.4, 0.05, Vector::Ones(3), 7);
    pieces.advance(5);
    pieces.advance(0);
    pieces.advance(18);
    CHECK(whole.iterate() == pieces.iterate());
    CHECK(whole.evals() == pieces.evals());
  }
}

TEST_CASE("divergence is flagged and stops the run") {
  const auto obj = fixtures::scalar(1.0, fixtures::no_reg(), 1.0);
  const ProxSubproblem sub(obj, vec({0.0}), 1.0);
  SolverKind kind{Method::GD, 0, 10.0};
  const InnerRunResult r = run_inner(kind, sub, vec({1.0}), 5000, 0);
  CHECK(r.diverged);
  CHECK(r.iterations < 5000);
}

TEST_CASE("SVRG residual decays geometrically over three epochs") {
  auto ls = random_least_squares(6, 4, 10);
  const CompositeObjective obj(ls, fixtures::no_reg(), ls->lipschitz());
  const ProxSubproblem sub(obj, Vector::Zero(4), ls->lipschitz());
  MethodRun run({Method::SVRG, 0, std::nullopt}, obj, Vector::Zero(4), ls->lipschitz(),
                default_step(Method::SVRG, sub.smooth_lipschitz()), Vector::Ones(4), 3);
  std::vector<double> t, logr;
  for (int epoch = 0; epoch <= 3; ++epoch) {
    t.push_back(static_cast<double>(run.iterations()));
    logr.push_back(std::log(stationarity_residual(sub, run.iterate()).residual));
    run.advance(10);
  }
  const Fit fit = linear_fit(t, logr);
  CHECK(fit.slope < 0.0);
  CHECK(logr.back() < logr.front());
}

TEST_CASE("linear convergence contract on strongly convex subproblems") {
  for (Method m : {Method::GD, Method::SVRG, Method::SAGA}) {
    for (std::uint64_t instance = 0; instance < 5; ++instance) {
      auto ls = random_least_squares(100 + instance, 5, 12);
      const CompositeObjective obj(ls, std::make_shared<ElasticNetRegularizer>(0.0, 0.01),
                                   ls->lipschitz());
      const double kappa = 0.2 * ls->lipschitz();
      const ProxSubproblem sub(obj, Vector::Constant(5, 0.5), kappa);
      const Vector z0 = warm_start(sub);
      const double step = default_step(m, sub.smooth_lipschitz());
      MethodRun run({m, 0, std::nullopt}, obj, sub.center(), kappa, step, z0, instance);
      std::vector<double> t, logr2;
      for (int check = 0; check < 40; ++check) {
        const double r = stationarity_residual(sub, run.iterate()).residual;
        if (r < 1e-12) break;
        t.push_back(static_cast<double>(run.iterations()));
        logr2.push_back(2.0 * std::log(r));
        run.advance(m == Method::GD ? 2 : 12);
      }
      REQUIRE(t.size() >= 5);
      const Fit fit = linear_fit(t, logr2);
      INFO("method " << to_string(m) << " instance " << instance);
      CHECK(fit.slope < 0.0);
      CHECK(fit.r2 > 0.9);
    }
  }
}
