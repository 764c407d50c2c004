#include "wdcat/catalyst.hpp"
#include "wdcat/data/generators.hpp"
#include "wdcat/problems/logistic.hpp"
#include "wdcat/regularizers.hpp"

#include <benchmark/benchmark.h>

namespace {

std::shared_ptr<const wdcat::CompositeObjective> logistic_fixture(wdcat::Index n, wdcat::Index p) {
  auto smooth = std::make_shared<wdcat::LogisticProblem>(
      wdcat::generate_classification(n, p, 1, 10.0, 0.05), 1e-3);
  return std::make_shared<wdcat::CompositeObjective>(
      smooth, std::make_shared<wdcat::ElasticNetRegularizer>(0.0, 1e-4), smooth->lipschitz());
}

void BM_AlphaNext(benchmark::State& state) {
  double alpha = 1.0;
  for (auto _ : state) {
    alpha = wdcat::alpha_next(alpha);
    if (alpha < 1e-6) alpha = 1.0;
    benchmark::DoNotOptimize(alpha);
  }
}
BENCHMARK(BM_AlphaNext);

void BM_ElasticNetProx(benchmark::State& state) {
  const auto p = state.range(0);
  const wdcat::Vector v = wdcat::Vector::LinSpaced(p, -3.0, 3.0);
  for (auto _ : state) {
    wdcat::Vector out = wdcat::elastic_net_prox(v, 0.1, 1e-3, 0.5);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_ElasticNetProx)->Arg(64)->Arg(4096);

void BM_SvrgEpoch(benchmark::State& state) {
  const auto n = state.range(0);
  const auto obj = logistic_fixture(n, 50);
  const wdcat::ProxSubproblem sub(*obj, wdcat::Vector::Zero(50), 2.0 * obj->lipschitz() / n);
  wdcat::SolverKind kind;
  for (auto _ : state) {
    auto r = wdcat::run_inner(kind, sub, wdcat::Vector::Zero(50), n, 7);
    benchmark::DoNotOptimize(r.z.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SvrgEpoch)->Arg(200)->Arg(1000);

void BM_CatalystIteration(benchmark::State& state) {
  const wdcat::Index n = 500;
  const auto obj = logistic_fixture(n, 50);
  wdcat::CatalystConfig cfg;
  cfg.kappa0 = cfg.kappa_cvx = 2.0 * obj->lipschitz() / n;
  cfg.T = cfg.S = n;
  cfg.max_outer = 1;
  wdcat::SolverKind kind;
  for (auto _ : state) {
    auto r = wdcat::run_catalyst(*obj, wdcat::Vector::Zero(50), cfg, kind);
    benchmark::DoNotOptimize(r.fval);
  }
}
BENCHMARK(BM_CatalystIteration);

}  // namespace

BENCHMARK_MAIN();
