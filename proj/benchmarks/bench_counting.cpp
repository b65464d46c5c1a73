#include <benchmark/benchmark.h>

#include "mimcount/families.hpp"
#include "mimcount/formulas.hpp"
#include "mimcount/lemmas.hpp"
#include "mimcount/matching.hpp"

namespace {

using namespace mimcount;

void BM_CountExtremal(benchmark::State& state) {
  const Graph g = build({Family::F, {state.range(0)}});
  for (auto _ : state) benchmark::DoNotOptimize(count_maximal(g));
}
BENCHMARK(BM_CountExtremal)->Arg(13)->Arg(31)->Arg(61)->Arg(121);

void BM_CountRandom(benchmark::State& state) {
  RandomGraphs rng(1);
  std::vector<Graph> graphs;
  for (int i = 0; i < 32; ++i) graphs.push_back(rng.next(state.range(0), state.range(0)));
  const Memo memo = state.range(1) ? Memo::On : Memo::Off;
  for (auto _ : state)
    for (const Graph& g : graphs) benchmark::DoNotOptimize(count_maximal(g, {memo}));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}
BENCHMARK(BM_CountRandom)->Args({12, 0})->Args({12, 1})->Args({24, 0})->Args({24, 1})->Args({40, 1});

void BM_Oracle(benchmark::State& state) {
  RandomGraphs rng(1);
  std::vector<Graph> graphs;
  for (int i = 0; i < 32; ++i) graphs.push_back(rng.next(state.range(0), state.range(0)));
  for (auto _ : state)
    for (const Graph& g : graphs) benchmark::DoNotOptimize(count_maximal_oracle(g));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(graphs.size()));
}
BENCHMARK(BM_Oracle)->Arg(12)->Arg(24);

void BM_Bracket(benchmark::State& state) {
  const RadicalExpr e = f_expr(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(e.bracket());
}
BENCHMARK(BM_Bracket)->Arg(14)->Arg(100)->Arg(1000);

void BM_Ledger(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(formula_ledger());
}
BENCHMARK(BM_Ledger)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
