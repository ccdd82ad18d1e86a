#include <benchmark/benchmark.h>

#include <vector>

#include "berezin/kernel.hpp"
#include "berezin/quadrature.hpp"
#include "berezin/seminorm.hpp"
#include "berezin/series.hpp"

using namespace berezin;

namespace {

void BM_BallSampler(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const BallSampler sampler(dim, 42);
  std::vector<double> x(static_cast<std::size_t>(dim));
  std::uint64_t i = 0;
  for (auto _ : state) {
    sampler.point(i++, x);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_BallSampler)->Arg(2)->Arg(6);

void BM_RadialImportancePoint(benchmark::State& state) {
  const RadialImportanceSampler sampler(static_cast<int>(state.range(0)), 1.5, 42);
  std::vector<double> x(static_cast<std::size_t>(state.range(0)));
  std::uint64_t i = 0;
  double acc = 0.0;
  for (auto _ : state) {
    acc += sampler.point(i++, x);
  }
  benchmark::DoNotOptimize(acc);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RadialImportancePoint)->Arg(2)->Arg(6);

void BM_KernelGrad(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const WeightContext ctx = make_context(n, 1.0);
  const BallSampler sampler(2 * n, 7);
  std::vector<double> xz(static_cast<std::size_t>(2 * n)), xw(xz);
  sampler.point(0, xz);
  sampler.point(1, xw);
  for (double& c : xz) c *= 0.8;
  for (double& c : xw) c *= 0.8;
  const CPoint z = CPoint::from_real(xz);
  const CPoint w = CPoint::from_real(xw);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_grad_z(z, w, ctx));
  }
}
BENCHMARK(BM_KernelGrad)->Arg(1)->Arg(3);

void BM_IntegrateWeighted(benchmark::State& state) {
  const WeightContext ctx = make_context(2, 1.5);
  QuadratureConfig cfg;
  cfg.samples = static_cast<std::uint64_t>(state.range(0));
  cfg.seed = 3;
  cfg.method = state.range(1) == 0 ? Method::uniform : Method::radial_importance;
  for (auto _ : state) {
    auto est = integrate_weighted([](const CPoint& w) { return std::abs(w[0]); }, ctx, cfg);
    benchmark::DoNotOptimize(est.value);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_IntegrateWeighted)->Args({100000, 0})->Args({100000, 1});

void BM_BoundFunctionComplex(benchmark::State& state) {
  const WeightContext ctx = make_context(1, 2.0);
  const double r = static_cast<double>(state.range(0)) / 1000.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bound_function_complex(ctx, r).value);
  }
}
BENCHMARK(BM_BoundFunctionComplex)->Arg(0)->Arg(500)->Arg(990);

void BM_DoubleAngleIntegral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(double_angle_integral(0.5, 0.6, 0.4, 0.5, 1.5));
  }
}
BENCHMARK(BM_DoubleAngleIntegral);

}  // namespace

BENCHMARK_MAIN();
