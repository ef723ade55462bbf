#include <benchmark/benchmark.h>

#include "sliceshear/differentials.hpp"
#include "sliceshear/dsl.hpp"
#include "sliceshear/shearing.hpp"
#include "sliceshear/svg.hpp"
#include "sliceshear/vanishing.hpp"

using namespace sliceshear;

static void BM_HhrFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int i = 1; i <= 6; ++i) benchmark::DoNotOptimize(hhr_family(n, i));
  }
}
BENCHMARK(BM_HhrFamily)->DenseRange(0, 4);

static void BM_TransportSeed(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const CyclicGroup g(k + 1);
  const Differential seed = hu_kriz_seed(4);
  const ShearContext ctx(g, k, default_transport_grading(seed, g));
  for (auto _ : state) benchmark::DoNotOptimize(transport(seed, ctx));
}
BENCHMARK(BM_TransportSeed)->DenseRange(1, 4);

static void BM_Correspond(benchmark::State& state) {
  const ShearContext ctx(CyclicGroup(5), 3);
  const ClassMonomial m = parse_class("Nt[3,2]^2*Nt[1,1]*aL1^3*aS^5*u2S^2*uL1", CyclicGroup(2));
  for (auto _ : state) benchmark::DoNotOptimize(correspond_class(m, ctx));
}
BENCHMARK(BM_Correspond);

static void BM_Admissible(benchmark::State& state) {
  const VanishingProfile profile(3, 16);
  const Differential d = hhr_family(3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(admissible(d, profile));
}
BENCHMARK(BM_Admissible);

namespace {

std::string chart_text(int diffs) {
  std::string text = "group C8\nwindow -2 40 60\nguide L1\nguide L2\nguide boundary\n";
  for (int i = 0; i < diffs; ++i) {
    const Differential d = *leibniz(hhr_family(2, 1 + i % 3), ClassMonomial::u_2sigma(CyclicGroup(3), 3, i));
    text += print_canonical(d) + "\n";
    text += "class c" + std::to_string(i) + " = " + print_canonical(d.target) + "\n";
  }
  return text;
}

}  // namespace

static void BM_ParseDocument(benchmark::State& state) {
  const std::string text = chart_text(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parse_document(text));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseDocument)->Arg(10)->Arg(100);

static void BM_EmitSvg(benchmark::State& state) {
  const ChartDocument doc = parse_document(chart_text(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(emit_svg(doc));
}
BENCHMARK(BM_EmitSvg)->Arg(10)->Arg(100);

BENCHMARK_MAIN();
