#include <benchmark/benchmark.h>

#include <random>

#include "richwords/bounds.hpp"
#include "richwords/eertree.hpp"
#include "richwords/enumerate.hpp"

using namespace richwords;

static void BM_EertreeAppend(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(0, q - 1);
  std::vector<Letter> word(4096);
  for (auto& x : word) x = static_cast<Letter>(pick(rng));
  for (auto _ : state) {
    Eertree tree{Alphabet{q}};
    for (auto x : word) benchmark::DoNotOptimize(tree.append(x));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(word.size()));
}
BENCHMARK(BM_EertreeAppend)->Arg(2)->Arg(4)->Arg(26);

static void BM_EertreeAppendUndo(benchmark::State& state) {
  auto tree = Eertree::from_word(Alphabet{2}, Word::parse("abaababaabaab", Alphabet{2}));
  for (auto _ : state) {
    tree.append(0);
    tree.undo();
  }
}
BENCHMARK(BM_EertreeAppendUndo);

static void BM_CountRich(benchmark::State& state) {
  const auto mode = state.range(1) ? CountMode::symmetry_reduced : CountMode::exact;
  for (auto _ : state) benchmark::DoNotOptimize(count_rich(Alphabet{2}, static_cast<int>(state.range(0)), mode));
}
BENCHMARK(BM_CountRich)->Args({18, 0})->Args({18, 1})->Args({22, 0})->Args({22, 1})->Unit(benchmark::kMillisecond);

static void BM_RecurrenceRhs(benchmark::State& state) {
  const auto table = count_rich(Alphabet{2}, 20, CountMode::symmetry_reduced);
  const auto n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(theorem_d_rhs(n, 2, table));
}
BENCHMARK(BM_RecurrenceRhs)->Arg(16)->Arg(40);
BENCHMARK_MAIN();
