#include <benchmark/benchmark.h>

#include "flocks/estate.hpp"
#include "flocks/flock.hpp"
#include "flocks/harness.hpp"

namespace {

using namespace flocks;

Flock worked_flock() {
  return parse_flock("{ A ; B ; C }\n{ A ; B -> C }\n{ ~C ; A & B }\n");
}

void BM_Entails(benchmark::State& state) {
  Base premises{parse_formula("A & (B | ~C)"), parse_formula("C -> D"),
                parse_formula("~B | D")};
  Formula goal = parse_formula("A -> D | ~C");
  for (auto _ : state) benchmark::DoNotOptimize(entails(premises, goal));
}
BENCHMARK(BM_Entails);

void BM_Remainders(benchmark::State& state) {
  Base base;
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i)
    base.insert(parse_formula("A" + std::to_string(i) + " | B"));
  Formula goal = parse_formula("B | A0 & A1");
  for (auto _ : state) benchmark::DoNotOptimize(remainders(base, goal));
}
BENCHMARK(BM_Remainders)->Arg(4)->Arg(8)->Arg(12);

void BM_Contract(benchmark::State& state) {
  Flock flock = worked_flock();
  Formula goal = parse_formula("A & B");
  for (auto _ : state) benchmark::DoNotOptimize(contract(flock, goal));
}
BENCHMARK(BM_Contract);

void BM_Generate(benchmark::State& state) {
  Flock flock = worked_flock();
  for (auto _ : state) benchmark::DoNotOptimize(generate(flock));
}
BENCHMARK(BM_Generate);

void BM_Isomorphic(benchmark::State& state) {
  Flock f = parse_flock("{ A }\n{ B }\n");
  Flock g = parse_flock("{ C ; D }\n");
  EpistemicState merged = pure_merge(generate(f), generate(g));
  EpistemicState direct = generate(merge(f, g));
  for (auto _ : state) benchmark::DoNotOptimize(isomorphic(merged, direct));
}
BENCHMARK(BM_Isomorphic);

void BM_Explore(benchmark::State& state) {
  Flock target = parse_flock("{ p }\n{ q }\n");
  for (auto _ : state)
    benchmark::DoNotOptimize(
        explore_constructibility(target, static_cast<int>(state.range(0)), 2));
}
BENCHMARK(BM_Explore)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
