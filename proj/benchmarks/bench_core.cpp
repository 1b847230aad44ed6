#include <benchmark/benchmark.h>

#include <random>

#include "qcirc/kirby.hpp"
#include "qcirc/linalg.hpp"
#include "qcirc/plumbing.hpp"
#include "qcirc/sl2.hpp"
#include "qcirc/strings.hpp"

using namespace qcirc;

namespace {

linalg::IntMatrix random_symmetric(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);
  linalg::IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = entry(rng);
  }
  return m;
}

IntString random_string(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::int64_t> entry(2, 9);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = entry(rng);
  return IntString(v);
}

void BM_Det(benchmark::State& state) {
  const auto m = random_symmetric(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::det(m));
}
BENCHMARK(BM_Det)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Snf(benchmark::State& state) {
  const auto m = random_symmetric(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(linalg::snf(m));
}
BENCHMARK(BM_Snf)->Arg(8)->Arg(16)->Arg(32);

void BM_WordToMatrix(benchmark::State& state) {
  const sl2::MonodromyWord w{random_string(static_cast<std::size_t>(state.range(0)), 3), +1};
  for (auto _ : state) benchmark::DoNotOptimize(sl2::word_to_matrix(w));
}
BENCHMARK(BM_WordToMatrix)->Arg(10)->Arg(100)->Arg(1000);

void BM_DualString(benchmark::State& state) {
  const auto s = random_string(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(strings::dual_string(s));
}
BENCHMARK(BM_DualString)->Arg(10)->Arg(100)->Arg(1000);

void BM_CycleHomology(benchmark::State& state) {
  const sl2::MonodromyWord w{random_string(static_cast<std::size_t>(state.range(0)), 5), +1};
  const auto g = plumbing::cycle_plumbing_from_word(w);
  for (auto _ : state) benchmark::DoNotOptimize(plumbing::boundary_homology(g));
}
BENCHMARK(BM_CycleHomology)->Arg(5)->Arg(20)->Arg(50);

void BM_Dualize(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  const IntString a = strings::family_string({k, std::vector<std::int64_t>(2 * k + 1, 1)});
  for (auto _ : state) benchmark::DoNotOptimize(kirby::dualize_procedure(a));
}
BENCHMARK(BM_Dualize)->Arg(1)->Arg(3)->Arg(6);

}  // namespace
BENCHMARK_MAIN();
