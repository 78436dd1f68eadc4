#include <benchmark/benchmark.h>

#include "charavg/arith.hpp"
#include "charavg/chargroup.hpp"
#include "charavg/lmoments.hpp"
#include "charavg/special.hpp"

namespace {

void BM_SieveTables(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(charavg::sieve_tables(n));
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_SieveTables)->Arg(10'000)->Arg(100'000)->Arg(1'000'000);

void BM_Digamma(benchmark::State& state) {
  double x = 0.123;
  for (auto _ : state) {
    benchmark::DoNotOptimize(charavg::digamma(x));
    x += 1e-9;  // defeat value caching without leaving the domain
  }
}
BENCHMARK(BM_Digamma);

void BM_HurwitzZeta(benchmark::State& state) {
  double a = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(charavg::hurwitz_zeta(2.5, a));
    a = a < 0.9 ? a + 1e-9 : 0.37;
  }
}
BENCHMARK(BM_HurwitzZeta);

void BM_CharacterGroupBuild(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(charavg::CharacterGroup(q));
}
BENCHMARK(BM_CharacterGroupBuild)->Arg(101)->Arg(1009)->Arg(9973);

void BM_M2Bruteforce(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const charavg::MomentEngine eng(q);
  for (auto _ : state) benchmark::DoNotOptimize(eng.m2_bruteforce());
}
BENCHMARK(BM_M2Bruteforce)->Arg(101)->Arg(499)->Arg(1009);

void BM_M4Bruteforce(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const charavg::MomentEngine eng(q);
  for (auto _ : state) benchmark::DoNotOptimize(eng.m4_bruteforce());
}
BENCHMARK(BM_M4Bruteforce)->Arg(101)->Arg(499);

void BM_Theorem2(benchmark::State& state) {
  const charavg::MomentEngine eng(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eng.m2_theorem2(40));
}
BENCHMARK(BM_Theorem2)->Arg(101)->Arg(499);

}  // namespace

BENCHMARK_MAIN();
