// Serial reference vs OpenMP map over the grid-parallel kernels.
#include <benchmark/benchmark.h>

#include "hht/catalog.hpp"
#include "hht/convolution.hpp"
#include "hht/hartley.hpp"
#include "hht/mellin.hpp"

namespace {

using namespace hht;

Execution mode(const benchmark::State& st) { return st.range(0) ? Execution::parallel : Execution::serial; }

void BM_HartleyDirect(benchmark::State& st) {
  const quad::QuadratureConfig cfg;
  const auto xs = decade_grid(1e-2, 1e2, 16);
  const auto& f = catalog_entry("exp").f;
  for (auto _ : st) benchmark::DoNotOptimize(hartley_transform(f, xs, HartleyMethod::direct, cfg, mode(st)));
}

void BM_MellinForward(benchmark::State& st) {
  const quad::QuadratureConfig cfg;
  const auto& f = catalog_entry("texp").f;
  const auto tau = MellinLineFunction::symmetric_grid(40.0, 257);
  for (auto _ : st) benchmark::DoNotOptimize(mellin_forward(f, tau, cfg, mode(st)));
}

void BM_HartleyInverse(benchmark::State& st) {
  const quad::QuadratureConfig cfg;
  const auto h = hartley_image(catalog_entry("exp"), cfg);
  const auto xs = linear_grid(0.1, 5.0, 64);
  for (auto _ : st) benchmark::DoNotOptimize(hartley_inverse_grid(h, xs, cfg, mode(st)));
}

void BM_DoubleMB(benchmark::State& st) {
  const auto F = catalog_entry("exp").mellin_line();
  for (auto _ : st) benchmark::DoNotOptimize(convolve_double_mb(F, F, 1.0, {}, mode(st)));
}

}  // namespace

BENCHMARK(BM_HartleyDirect)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MellinForward)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HartleyInverse)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DoubleMB)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
