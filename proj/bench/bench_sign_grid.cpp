#include <benchmark/benchmark.h>

#include "realcurve/parser.hpp"
#include "realcurve/plot.hpp"

using namespace realcurve;

namespace {

const BiPoly& curve() {
  static const BiPoly f = parse_poly("(x^2 + y^2)^3 - 4*x^2*y^2 + x^5*y - 3*y^4 + 1/9");
  return f;
}

PlotWindow window(benchmark::State& state) {
  PlotWindow w;
  w.resolution = static_cast<int>(state.range(0));
  return w;
}

void BM_SignGridSerial(benchmark::State& state) {
  const PlotWindow w = window(state);
  for (auto _ : state) benchmark::DoNotOptimize(sign_grid_serial(curve(), w));
  state.SetItemsProcessed(state.iterations() * (w.resolution + 1) * (w.resolution + 1));
}

void BM_SignGridParallel(benchmark::State& state) {
  const PlotWindow w = window(state);
  for (auto _ : state) benchmark::DoNotOptimize(sign_grid_parallel(curve(), w));
  state.SetItemsProcessed(state.iterations() * (w.resolution + 1) * (w.resolution + 1));
}

}  // namespace

BENCHMARK(BM_SignGridSerial)->Arg(200)->Arg(800)->Arg(1600)->UseRealTime();
BENCHMARK(BM_SignGridParallel)->Arg(200)->Arg(800)->Arg(1600)->UseRealTime();

BENCHMARK_MAIN();
