#include <benchmark/benchmark.h>

#include <random>

#include "mirhecke/algebra.hpp"
#include "mirhecke/characters.hpp"
#include "mirhecke/tensorrep.hpp"

using namespace mirhecke;

static void BM_LaurentProduct(benchmark::State& state) {
  Laurent a, b;
  for (int i = 0; i < state.range(0); ++i) {
    a += Laurent::q_power(i, i + 1);
    b += Laurent::q_power(-i, 2 * i - 3);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentProduct)->Arg(4)->Arg(16)->Arg(64);

// Products of random basis elements; the per-rank rmul cache warms up in the
// first iterations.
static void BM_BasisProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto basis = standard_basis(n);
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  for (auto _ : state) {
    auto x = mul(AlgebraElement::basis(basis[pick(rng)]), AlgebraElement::basis(basis[pick(rng)]));
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_BasisProduct)->Arg(3)->Arg(4)->Arg(5);

static void BM_ReduceWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GeneratorWord w;
  for (int i = 1; i < n; ++i) w.push_back(Letter::T(i));
  w.push_back(Letter::P(1));
  for (int i = n - 1; i >= 1; --i) w.push_back(Letter::Tinv(i));
  w.push_back(Letter::P(2));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_word(n, w));
}
BENCHMARK(BM_ReduceWord)->Arg(4)->Arg(6);

// The character memo is process-wide, so after the first iteration this
// measures table assembly from memoized entries.
static void BM_CharacterTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(character_table(n));
}
BENCHMARK(BM_CharacterTable)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_CharOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto x = hat_T(n, Partition{2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(char_oracle(x, n, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_CharOracle)->Args({4, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

static void BM_PieriBruteforce(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pieri_bruteforce(m, Partition{2, 1}, 5));
}
BENCHMARK(BM_PieriBruteforce)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ImageRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(image_rank(n, n, 3));
}
BENCHMARK(BM_ImageRank)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
