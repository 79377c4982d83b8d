#include <benchmark/benchmark.h>

#include "setpart/genfun.hpp"
#include "setpart/patterns.hpp"
#include "setpart/stats.hpp"

using namespace setpart;

static void BM_EnumerateRgfs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::int64_t count = 0;
    for (const Rgf& w : rgfs(n)) count += w.size();
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateRgfs)->DenseRange(8, 11);

static void BM_ContainmentScan(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PatternSet ps = PatternSet::parse("13/24");
  for (auto _ : state) {
    std::int64_t hits = 0;
    for (const Rgf& w : rgfs(n)) hits += avoids_all(w, ps) ? 1 : 0;
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_ContainmentScan)->DenseRange(7, 9);

static void BM_AvoiderSearch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PatternSet ps = PatternSet::parse("13/24");
  for (auto _ : state) {
    std::int64_t count = 0;
    for_each_avoider(n, ps, [&](const Rgf&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_AvoiderSearch)->DenseRange(9, 11);

static void BM_SpreadBlockBruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PatternSet ps = PatternSet::parse("1/2/3");
  const unsigned jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sb_bruteforce(n, ps, {jobs}));
}
BENCHMARK(BM_SpreadBlockBruteForce)->Args({12, 1})->Args({12, 0})->Unit(benchmark::kMillisecond);

static void BM_SpreadBlockFormula(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(formula(FormulaId::kSb1_2_3, n));
}
BENCHMARK(BM_SpreadBlockFormula)->Arg(12)->Arg(40);

static void BM_MotzkinRecursion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(formula_table(FormulaId::kSb123And13_24, n));
}
BENCHMARK(BM_MotzkinRecursion)->Arg(10)->Arg(20);

static void BM_Av321Recursions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(i_formula_table(n));
    benchmark::DoNotOptimize(m_formula_table(n));
  }
}
BENCHMARK(BM_Av321Recursions)->Arg(9)->Arg(14);

static void BM_Av321BruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(i_bruteforce(n));
}
BENCHMARK(BM_Av321BruteForce)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
