#include <benchmark/benchmark.h>

#include <random>

#include "qhrigid/char_calculus.hpp"
#include "qhrigid/coeff_quiver.hpp"
#include "qhrigid/data.hpp"
#include "qhrigid/rigidity.hpp"

namespace {

using namespace qhr;

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Field f(static_cast<unsigned long>(state.range(1)));
  std::mt19937_64 rng(1);
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, Rational(static_cast<long>(rng() % 11) - 5));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Args({16, 0})->Args({16, 7})->Args({48, 0})->Args({48, 7});

void BM_BuildAlgebra(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(load_algebra("zigzag3"));
}
BENCHMARK(BM_BuildAlgebra);

void BM_Tilting(benchmark::State& state) {
  const auto alg = load_algebra("zigzag3");
  for (auto _ : state) {
    StandardSystem sys(alg);
    benchmark::DoNotOptimize(ringel_tilting(sys, 2));
  }
}
BENCHMARK(BM_Tilting);

void BM_Detector(benchmark::State& state) {
  StandardSystem sys(load_algebra("zigzag3"));
  const auto& t = sys.tilting(2);
  for (auto _ : state) benchmark::DoNotOptimize(detect_stretched(sys, t, Side::DeltaL));
}
BENCHMARK(BM_Detector);

void BM_Enumerator(benchmark::State& state) {
  StandardSystem sys(load_algebra("zigzag3"));
  const auto& t = sys.tilting(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_stretched(sys, t, Side::DeltaL, FiltrationKind::Radical));
}
BENCHMARK(BM_Enumerator);

void BM_Pipeline(benchmark::State& state) {
  const auto alg = load_algebra("stretched");
  for (auto _ : state) {
    StandardSystem sys(alg);
    benchmark::DoNotOptimize(rigidity_pipeline(sys, 2));
  }
}
BENCHMARK(BM_Pipeline);

void BM_ExtractQuiver(benchmark::State& state) {
  StandardSystem sys(load_algebra("zigzag3"));
  const auto& p = sys.projective_module(1);
  for (auto _ : state) benchmark::DoNotOptimize(extract(p));
}
BENCHMARK(BM_ExtractQuiver);

void BM_Sl4Projectives(benchmark::State& state) {
  const BlockData& b = BlockData::sl4();
  for (auto _ : state)
    for (std::size_t m = 0; m < b.size(); ++m) benchmark::DoNotOptimize(projective_layers(b, m));
}
BENCHMARK(BM_Sl4Projectives);

void BM_Sl4SolvePlacementT5(benchmark::State& state) {
  const BlockData& b = BlockData::sl4();
  const auto target = parse_profile("3,3' | 2,2,fl,fl',4 | 1,3,3,3',3',5 | 2,2,fl,fl',4 | 3,3'");
  const std::vector<std::size_t> labels = {b.index("3"), b.index("3'"), b.index("fl"),
                                           b.index("fl'"), b.index("4"), b.index("5")};
  for (auto _ : state) benchmark::DoNotOptimize(solve_placement(target, labels, b));
}
BENCHMARK(BM_Sl4SolvePlacementT5);

}  // namespace

BENCHMARK_MAIN();
