#include "bomc/best_of_many.hpp"
#include "bomc/certificate.hpp"
#include "bomc/constants.hpp"
#include "bomc/generator.hpp"
#include "bomc/relaxation.hpp"
#include "bomc/tjoin.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace bomc;

// Dense-ish instance with n vertices, |T| = 2 for even seeds and 4 otherwise.
Instance instance_for(int n, std::uint64_t seed) {
  GenParams p;
  p.n = n;
  p.m = std::min(14, n * (n - 1) / 2);
  p.seed = seed;
  p.t_size = seed % 2 == 0 ? 2 : std::min(4, n - n % 2);
  return gen_random(p);
}

void BM_Relaxation(benchmark::State& state) {
  const Instance inst = instance_for(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_relaxation(inst));
}
BENCHMARK(BM_Relaxation)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_BestOfMany(benchmark::State& state) {
  const Instance inst = instance_for(static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(best_of_many(inst));
}
BENCHMARK(BM_BestOfMany)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Certificate(benchmark::State& state) {
  const Instance inst = instance_for(static_cast<int>(state.range(0)), 7);
  const BomReport rep = best_of_many(inst);
  const Rat opt = brute_force_opt(inst).length;
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificates(inst, rep, Rat(4, 9), {}, opt));
}
BENCHMARK(BM_Certificate)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_BruteForceOpt(benchmark::State& state) {
  GenParams p;
  p.n = 6;
  p.m = static_cast<int>(state.range(0));
  p.seed = 9;
  const Instance inst = gen_random(p);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_opt(inst));
}
BENCHMARK(BM_BruteForceOpt)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_MinTJoin(benchmark::State& state) {
  GenParams p;
  p.n = static_cast<int>(state.range(0));
  p.m = 2 * p.n;
  p.t_size = p.n - p.n % 2;
  p.seed = 11;
  const Instance inst = gen_random(p);
  for (auto _ : state) benchmark::DoNotOptimize(min_tjoin(inst, inst.terminals()));
}
BENCHMARK(BM_MinTJoin)->DenseRange(8, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_MixedBoundMinimum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(minimize_mixed_bound());
}
BENCHMARK(BM_MixedBoundMinimum)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
