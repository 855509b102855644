#include <benchmark/benchmark.h>

#include "psg/apery.hpp"
#include "psg/decompose.hpp"
#include "psg/enumeration.hpp"
#include "psg/hilbert.hpp"
#include "psg/symmetry.hpp"

namespace {

psg::PSemigroup make(std::vector<std::int64_t> gens, std::int64_t p) {
  return psg::build_psemigroup(psg::validate_generators(gens), psg::PParameter(p));
}

void BM_Build(benchmark::State& state) {
  const auto p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(make({6, 17, 28}, p).frobenius());
}
BENCHMARK(BM_Build)->Arg(0)->Arg(5)->Arg(50)->Arg(500);

void BM_Apery(benchmark::State& state) {
  const auto s = make({6, 17, 28}, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psg::apery_set(s).sorted.size());
}
BENCHMARK(BM_Apery)->Arg(5)->Arg(500);

void BM_Classify(benchmark::State& state) {
  const auto s = make({6, 7, 17, 28}, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psg::classify(s, true).type_number);
}
BENCHMARK(BM_Classify)->Arg(12)->Arg(100);

void BM_HilbertFromApery(benchmark::State& state) {
  const auto s = make({3, 10, 17}, state.range(0));
  const auto ap = psg::apery_set(s);
  const auto n = 3 * (s.frobenius() + 1);
  for (auto _ : state) benchmark::DoNotOptimize(psg::hilbert_from_apery(ap, n));
}
BENCHMARK(BM_HilbertFromApery)->Arg(4)->Arg(40);

void BM_Decompose(benchmark::State& state) {
  const auto t = psg::FiniteSemigroup::from_psemigroup(make({5, 9, 16}, state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(psg::irreducible_decomposition(t).size());
}
BENCHMARK(BM_Decompose)->Arg(0)->Arg(2)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
