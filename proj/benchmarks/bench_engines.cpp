#include <benchmark/benchmark.h>

#include <random>

#include "stanley/decomposer.hpp"
#include "stanley/depth.hpp"
#include "stanley/sdepth.hpp"
#include "stanley/verifier.hpp"

using namespace stanley;

namespace {

std::vector<MonomialIdeal> sample(std::size_t n, std::size_t max_m,
                                  Exponent degree, std::size_t count) {
  BatchConfig c;
  c.n = n;
  c.max_m = max_m;
  c.max_degree = degree;
  c.sample_size = count;
  c.seed = 2024;
  return batch_instances(c);
}

void BM_SdepthVariables(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MonomialIdeal I = variables_ideal(n, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(sdepth_exact(I).sdepth);
}
BENCHMARK(BM_SdepthVariables)->DenseRange(3, 6);

void BM_SdepthStrategy(benchmark::State &state) {
  const auto ideals = sample(4, 7, 2, 40);
  SdepthOptions o;
  o.strategy = state.range(0) == 0 ? SearchStrategy::DancingLinks
                                   : SearchStrategy::LeastPoint;
  for (auto _ : state)
    for (const MonomialIdeal &I : ideals)
      benchmark::DoNotOptimize(sdepth_exact(I, o).sdepth);
}
BENCHMARK(BM_SdepthStrategy)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SdepthExampleN3(benchmark::State &state) {
  const MonomialIdeal I = gen_example_n3();
  for (auto _ : state)
    benchmark::DoNotOptimize(sdepth_exact(I).sdepth);
}
BENCHMARK(BM_SdepthExampleN3)->Unit(benchmark::kMillisecond);

void BM_Betti(benchmark::State &state) {
  const auto ideals = sample(4, 7, 3, 40);
  for (auto _ : state)
    for (const MonomialIdeal &I : ideals)
      benchmark::DoNotOptimize(betti(I).total(0));
}
BENCHMARK(BM_Betti)->Unit(benchmark::kMillisecond);

void BM_BettiOracle(benchmark::State &state) {
  const auto ideals = sample(4, 7, 3, 40);
  for (auto _ : state)
    for (const MonomialIdeal &I : ideals)
      benchmark::DoNotOptimize(betti_oracle_lcm(I).total(0));
}
BENCHMARK(BM_BettiOracle)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State &state) {
  const auto ideals = sample(static_cast<std::size_t>(state.range(0)),
                             2 * static_cast<std::size_t>(state.range(0)) - 1, 2, 40);
  for (auto _ : state)
    for (const MonomialIdeal &I : ideals)
      benchmark::DoNotOptimize(decompose(I).sdepth_of_D);
}
BENCHMARK(BM_Decompose)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_VerifyDecomposition(benchmark::State &state) {
  const MonomialIdeal I = gen_family_even(4);
  const StanleyDecomposition D = decompose(I).decomposition;
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_decomposition(I, D));
}
BENCHMARK(BM_VerifyDecomposition)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
