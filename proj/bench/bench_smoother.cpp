// Parallel vs serial smoothing passes.

#include <benchmark/benchmark.h>

#include <cmath>

#include "fgs/smoother.hpp"

namespace {

fgs::Image scene(int n) {
  fgs::Image img(n, n, 1);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      img.at(x, y) = (x * x + y * y < n * n / 4 ? 180.0 : 60.0) + 8.0 * std::sin(0.7 * x + 1.3 * y);
  return img;
}

template <fgs::Prior P, bool Parallel>
void BM_Smooth(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const fgs::Image f = scene(n);
  const auto w = fgs::compute_weights(f, 7.65);
  fgs::SmootherConfig cfg;
  cfg.prior = P;
  for (auto _ : state) {
    auto r = Parallel ? fgs::smooth(f, w, cfg) : fgs::smooth_serial(f, w, cfg);
    benchmark::DoNotOptimize(r.u.samples().data());
  }
  state.SetItemsProcessed(state.iterations() * n * n * cfg.iters_T);
}

BENCHMARK(BM_Smooth<fgs::Prior::kWls, true>)->Name("wls/parallel")->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Smooth<fgs::Prior::kWls, false>)->Name("wls/serial")->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Smooth<fgs::Prior::kWtv, true>)->Name("wtv/parallel")->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Smooth<fgs::Prior::kWtv, false>)->Name("wtv/serial")->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
