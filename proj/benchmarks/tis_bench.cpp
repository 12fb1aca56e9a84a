#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "tis/conflict.hpp"
#include "tis/generators.hpp"
#include "tis/interval_engine.hpp"
#include "tis/opvd.hpp"
#include "tis/order_preservation.hpp"
#include "tis/solvers.hpp"
#include "tis/unit_interval.hpp"

using namespace tis;

static void BM_ConflictGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = gen_random_unit(n, 4, 2, 0, 1, Rational(n, 4));
  for (auto _ : state) benchmark::DoNotOptimize(conflict_graph(inst));
}
BENCHMARK(BM_ConflictGraph)->Arg(64)->Arg(256)->Arg(1024);

static void BM_MwisInterval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = gen_random_unit(n, 1, 1, 0, 2, Rational(n, 4), 100);
  const auto w = inst.weights();
  for (auto _ : state) benchmark::DoNotOptimize(mwis_interval(inst.models()[0], w));
  state.SetComplexityN(n);
}
BENCHMARK(BM_MwisInterval)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_UnitRecognition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = gen_random_unit(n, 1, 1, 0, 3, Rational(n, 4)).graphs()[0];
  for (auto _ : state) benchmark::DoNotOptimize(recognize_unit_interval(g));
}
BENCHMARK(BM_UnitRecognition)->Arg(32)->Arg(128)->Arg(512);

static void BM_RecognizeOrderPreserving(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = gen_order_preserving(n, 4, 2, 0, 4);
  for (auto _ : state) benchmark::DoNotOptimize(recognize_order_preserving(inst));
}
BENCHMARK(BM_RecognizeOrderPreserving)->Arg(32)->Arg(128)->Arg(512);

static void BM_SolveExactOp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = gen_order_preserving(n, 4, 2, 0, 5, 50);
  const auto ordering = *find_common_ordering(inst);
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact_op(inst, ordering));
}
BENCHMARK(BM_SolveExactOp)->Arg(32)->Arg(128)->Arg(512);

static void BM_SolveGreedy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = gen_random_unit(n, 3, 1, 0, 6, Rational(n, 3), 50);
  for (auto _ : state) benchmark::DoNotOptimize(solve_greedy(inst));
}
BENCHMARK(BM_SolveGreedy)->Arg(32)->Arg(128)->Arg(512);

static void BM_SolveBruteForce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = gen_random_unit(n, 3, 1, 0, 7, Rational(n, 3), 50);
  for (auto _ : state) benchmark::DoNotOptimize(solve_exact_bruteforce(inst));
}
BENCHMARK(BM_SolveBruteForce)->DenseRange(10, 30, 10);

static void BM_MinOpvdRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = gen_random_unit(n, 2, 1, 0, 8, Rational(n, 3));
  for (auto _ : state) benchmark::DoNotOptimize(min_opvd(inst));
}
BENCHMARK(BM_MinOpvdRandom)->DenseRange(6, 14, 4);

static void BM_MinOpvdGadget(benchmark::State& state) {
  const std::vector<std::string> perms{"abcde", "bdace", "caebd"};
  const auto inst = gen_lcsp_gadget(perms);
  const std::vector<VertexIndex> sigma{0, 1, 2, 3, 4};
  for (auto _ : state) benchmark::DoNotOptimize(min_opvd(inst, OpvdOptions{std::nullopt, sigma}));
}
BENCHMARK(BM_MinOpvdGadget);

static void BM_SolveFpt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = gen_random_unit(n, 2, 1, 0, 9, Rational(n, 3), 20);
  const auto s = min_opvd(inst).deletion_set;
  state.counters["deletion"] = static_cast<double>(s.size());
  for (auto _ : state) benchmark::DoNotOptimize(solve_fpt(inst, s));
}
BENCHMARK(BM_SolveFpt)->Arg(10)->Arg(14);

BENCHMARK_MAIN();
