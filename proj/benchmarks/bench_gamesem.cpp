#include <benchmark/benchmark.h>

#include "gamesem/builtins.hpp"
#include "gamesem/equiv.hpp"
#include "gamesem/pcf.hpp"

using namespace gamesem;

namespace {

Bounds at(unsigned nat, std::size_t len) {
  Bounds b;
  b.max_nat = nat;
  b.max_play_len = len;
  return b;
}

void BM_ObsAdd(benchmark::State& state) {
  const Bounds b = at(static_cast<unsigned>(state.range(0)), 6);
  const InnocentStrategy add = builtins::add_lr(b.max_nat);
  for (auto _ : state) benchmark::DoNotOptimize(obs(add, b));
}
BENCHMARK(BM_ObsAdd)->DenseRange(1, 4);

void BM_ComposeTraces(benchmark::State& state) {
  const Bounds b = at(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const InnocentStrategy c = compose(builtins::add_lr(2), builtins::succ(2), b);
    benchmark::DoNotOptimize(traces(c, b));
  }
}
BENCHMARK(BM_ComposeTraces)->Arg(4)->Arg(6)->Arg(8);

void BM_DenoteRecursion(benchmark::State& state) {
  Bounds b = at(3, 6);
  b.fix_depth = static_cast<unsigned>(state.range(0));
  const auto term = pcf::parse(
      "fix (fun f: nat -> nat -> fun n: nat -> ifz n then 0 else succ (f (pred n)))");
  for (auto _ : state) benchmark::DoNotOptimize(obs(pcf::denote(term, b), b));
}
BENCHMARK(BM_DenoteRecursion)->DenseRange(1, 4);

void BM_BruteForceLeq(benchmark::State& state) {
  Bounds b = at(1, 6);
  b.max_view_len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        brute_force_leq_ib(builtins::add_lr(1), builtins::add_rl(1), b));
  }
}
BENCHMARK(BM_BruteForceLeq)->Arg(2)->Arg(4)->Arg(6);

}  // namespace
BENCHMARK_MAIN();
