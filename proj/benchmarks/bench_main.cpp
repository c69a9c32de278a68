#include <benchmark/benchmark.h>

#include <random>

#include "grassqh/exact_matrix.hpp"
#include "grassqh/hodge.hpp"
#include "grassqh/partitions.hpp"
#include "grassqh/qh_grassmannian.hpp"
#include "grassqh/qh_section.hpp"
#include "grassqh/screen.hpp"

using namespace grassqh;

static void BM_CharPolyRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-50, 50);
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(d(rng));
  for (auto _ : state) benchmark::DoNotOptimize(m.char_poly());
}
BENCHMARK(BM_CharPolyRandom)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_QuantumRingBuild(benchmark::State& state) {
  BoxConstraint box(3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    QuantumGrassmannian ring(box);
    benchmark::DoNotOptimize(ring.dim());
  }
}
BENCHMARK(BM_QuantumRingBuild)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_SectionRingBuild(benchmark::State& state) {
  for (auto _ : state) {
    SectionRing ring(3, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(ring.dim());
  }
}
BENCHMARK(BM_SectionRingBuild)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_SectionCharPoly38(benchmark::State& state) {
  SectionRing ring(3, 8);
  for (auto _ : state) benchmark::DoNotOptimize(section_charpoly(ring, 7, false));
}
BENCHMARK(BM_SectionCharPoly38)->Unit(benchmark::kMillisecond);

static void BM_ChiYSection(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(chi_y(k, n, true));
}
BENCHMARK(BM_ChiYSection)->Args({3, 7})->Args({3, 9})->Args({4, 8})->Unit(benchmark::kMillisecond);

static void BM_CoreSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(core_search(BoxConstraint(n / 2, n)));
}
BENCHMARK(BM_CoreSearch)->Arg(12)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_ExceptionalTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exceptional_table());
}
BENCHMARK(BM_ExceptionalTable)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
