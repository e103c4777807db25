#include <benchmark/benchmark.h>

#include <vector>

#include "mockq/mock.hpp"
#include "mockq/qseries.hpp"
#include "mockq/transforms.hpp"
#include "mockq/verify.hpp"

using namespace mockq;

namespace {

void BM_theta_sum(benchmark::State& state) {
  const QContext ctx(static_cast<double>(state.range(0)) / 100.0);
  const cplx x{0.7, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(theta(x, ctx));
}
BENCHMARK(BM_theta_sum)->Arg(5)->Arg(30)->Arg(60)->Arg(90);

void BM_theta_product(benchmark::State& state) {
  const QContext ctx(static_cast<double>(state.range(0)) / 100.0);
  const cplx x{0.7, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(theta(x, ctx, ThetaMode::product));
}
BENCHMARK(BM_theta_product)->Arg(5)->Arg(30)->Arg(60)->Arg(90);

void BM_mu(benchmark::State& state) {
  const QContext ctx(0.25);
  const cplx x{0.3, 0.2}, y{0.5, -0.1};
  for (auto _ : state) benchmark::DoNotOptimize(mu(x, y, ctx));
}
BENCHMARK(BM_mu);

void BM_appell_G(benchmark::State& state) {
  const QContext ctx(0.3);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(appell_G(m, 0.45, 0.5, ctx));
}
BENCHMARK(BM_appell_G)->DenseRange(1, 4);

void BM_integral_solution(benchmark::State& state) {
  const QContext ctx(0.3);
  const std::vector<cplx> a = {0.4};
  const std::vector<cplx> b = {0.9};
  const auto point = state.range(0) == 0 ? ExpansionPoint::zero : ExpansionPoint::infinity;
  for (auto _ : state) benchmark::DoNotOptimize(integral_solution(point, a, b, 0.55, ctx));
}
BENCHMARK(BM_integral_solution)->Arg(0)->Arg(1);

void BM_run_check(benchmark::State& state) {
  const QContext ctx(0.5);
  const RunOptions options{.threads = static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(run_check("mu_shift", 200, ctx, options));
}
BENCHMARK(BM_run_check)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
