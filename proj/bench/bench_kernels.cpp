#include <benchmark/benchmark.h>

#include "k3lat/fibrations.hpp"

using namespace k3lat;

namespace {

void BM_RootsSerial(benchmark::State& state, const char* name) {
  Lattice l = catalog(name);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_roots_serial(l));
}

void BM_RootsParallel(benchmark::State& state, const char* name) {
  Lattice l = catalog(name);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_roots(l));
}

void BM_ShortVectorsSerial(benchmark::State& state) {
  IntMatrix q = catalog("E8").gram();
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) q(i, j) = -q(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(short_vectors_serial(q, Int(state.range(0))));
}

void BM_ShortVectorsParallel(benchmark::State& state) {
  IntMatrix q = catalog("E8").gram();
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) q(i, j) = -q(i, j);
  for (auto _ : state) benchmark::DoNotOptimize(short_vectors(q, Int(state.range(0))));
}

void BM_SearchConfigs(benchmark::State& state) {
  auto required = FiberConfiguration::parse("IV*");
  std::vector<KodairaFiber> allowed;
  for (const char* t : {"I2", "I3", "I4", "I5", "I6", "III", "IV", "I*0", "I*1"}) allowed.push_back(KodairaFiber::parse(t));
  for (auto _ : state) benchmark::DoNotOptimize(search_configs(required, 3, allowed, 9, Int(216)));
}

}  // namespace

BENCHMARK_CAPTURE(BM_RootsSerial, E7, "E7");
BENCHMARK_CAPTURE(BM_RootsParallel, E7, "E7");
BENCHMARK_CAPTURE(BM_RootsSerial, A5_cubed, "A5+A5+A5");
BENCHMARK_CAPTURE(BM_RootsParallel, A5_cubed, "A5+A5+A5");
BENCHMARK(BM_ShortVectorsSerial)->Arg(2)->Arg(4);
BENCHMARK(BM_ShortVectorsParallel)->Arg(2)->Arg(4);
BENCHMARK(BM_SearchConfigs);

BENCHMARK_MAIN();
