// Microbenchmarks for the hot paths: exact matrix kernels, the subspace
// machinery, and the two mid-sized categorical constructions. Useful for
// spotting regressions in the rational arithmetic, not for absolute numbers.

#include "wb/adjlift.hpp"
#include "wb/exactlin.hpp"
#include "wb/rng.hpp"
#include "wb/sampling.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace wb;

void BM_compose(benchmark::State& state) {
  Rng rng(1);
  const int n = static_cast<int>(state.range(0));
  const LinMap a = rng.matrix(n, n);
  const LinMap b = rng.matrix(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}

void BM_kron(benchmark::State& state) {
  Rng rng(2);
  const int n = static_cast<int>(state.range(0));
  const LinMap a = rng.matrix(n, n);
  const LinMap b = rng.matrix(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}

void BM_kernel(benchmark::State& state) {
  Rng rng(3);
  const int n = static_cast<int>(state.range(0));
  const LinMap a = rng.matrix(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(a));
}

void BM_mapping_comodule(benchmark::State& state) {
  Rng rng(4);
  const FinBialgebra h = group_bialgebra_zn(2);
  const Comodule z = sample_comodule(h.coalgebra, rng);
  const Comodule v = sample_comodule(h.coalgebra, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mapping_comodule(h, z, v));
}

void BM_kelly_round_trip(benchmark::State& state) {
  Rng rng(5);
  const OplaxStructure s = sample_oplax(rng, 3, 3);
  const AdjunctionData adj = standard_adjunction(s.carrier.dim);
  for (auto _ : state) {
    const LaxStructure lax = kelly_oplax_to_lax(adj, s);
    benchmark::DoNotOptimize(kelly_lax_to_oplax(adj, lax));
  }
}

BENCHMARK(BM_compose)->Arg(8)->Arg(24);
BENCHMARK(BM_kron)->Arg(4)->Arg(8);
BENCHMARK(BM_kernel)->Arg(8)->Arg(24);
BENCHMARK(BM_mapping_comodule);
BENCHMARK(BM_kelly_round_trip);

}  // namespace

BENCHMARK_MAIN();
