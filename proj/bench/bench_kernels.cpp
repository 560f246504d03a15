// Serial reference kernels against their OpenMP counterparts.
//
//   ./bench_kernels --benchmark_filter=Scan
//   OMP_NUM_THREADS=8 ./bench_kernels

#include <benchmark/benchmark.h>

#include <vector>

#include "protometric/generators.hpp"
#include "protometric/kernels.hpp"

namespace pk = protometric::kernels;

namespace {

std::vector<double> uniform_matrix(std::size_t n) {
  const auto m = protometric::gen_uniform({n, 42, 10.0}, false);
  return {m.entries().begin(), m.entries().end()};
}

std::vector<double> raw_distances(std::size_t n) {
  protometric::Rng rng(7, 10.0);
  std::vector<double> d(n * n, 0.0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) d[x * n + y] = rng.positive(10.0);
  return d;
}

template <bool Parallel>
void BM_ScanTriples(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = uniform_matrix(n);
  const pk::TriangleTerm term{m.data(), n, protometric::InequalityType::t, true};
  for (auto _ : state) {
    auto r = Parallel ? pk::parallel::scan_triples(n, 1e-9, 10, term)
                      : pk::serial::scan_triples(n, 1e-9, 10, term);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * n * n));
}

template <bool Parallel>
void BM_MinPlusClosure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto raw = raw_distances(n);
  for (auto _ : state) {
    state.PauseTiming();
    auto d = raw;
    state.ResumeTiming();
    auto sweeps = Parallel ? pk::parallel::min_plus_closure(d, n) : pk::serial::min_plus_closure(d, n);
    benchmark::DoNotOptimize(sweeps);
    benchmark::DoNotOptimize(d.data());
  }
}

}  // namespace

BENCHMARK(BM_ScanTriples<false>)->Name("ScanTriples/serial")->RangeMultiplier(2)->Range(32, 256)->UseRealTime();
BENCHMARK(BM_ScanTriples<true>)->Name("ScanTriples/parallel")->RangeMultiplier(2)->Range(32, 256)->UseRealTime();
BENCHMARK(BM_MinPlusClosure<false>)->Name("MinPlusClosure/serial")->RangeMultiplier(2)->Range(32, 256)->UseRealTime();
BENCHMARK(BM_MinPlusClosure<true>)->Name("MinPlusClosure/parallel")->RangeMultiplier(2)->Range(32, 256)->UseRealTime();

BENCHMARK_MAIN();
