// Serial reference paths against their OpenMP counterparts.

#include "quadnet/gitstab.hpp"
#include "quadnet/net.hpp"
#include "quadnet/verify.hpp"

#include <benchmark/benchmark.h>

using namespace quadnet;

namespace {

Exec execOf(const benchmark::State& state) { return state.range(0) == 0 ? Exec::serial : Exec::parallel; }

// Dense enough that every Plücker coordinate is in play.
const Net& denseNet() {
  static const Net net = parseNet("x0^2 + 2*x1*x4 - x2*x5 + x3^2", "x1^2 - x0*x3 + 3*x2*x4 + x5^2", "x2^2 + x0*x5 - x1*x3 + 2*x4^2");
  return net;
}

void BM_TorusScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(torusScan13(denseNet(), execOf(state)));
}

void BM_PluckerSupport(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(pluckerSupport(denseNet(), execOf(state)));
}

void BM_TorusLP(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(torusDestabilizerLP(denseNet(), execOf(state)));
}

void BM_RandomSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(randomSearch(denseNet(), 4, 1, execOf(state)));
}

void BM_VerifyCases(benchmark::State& state) {
  const auto& cases = bundledCases();
  for (auto _ : state) benchmark::DoNotOptimize(verifyCases(cases, execOf(state)));
}

void BM_LemmaHarness(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lemmaEquivalenceHarness(50, 1, execOf(state)));
}

} // namespace

BENCHMARK(BM_TorusScan)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PluckerSupport)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TorusLP)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSearch)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyCases)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LemmaHarness)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
