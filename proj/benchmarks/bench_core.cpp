#include <benchmark/benchmark.h>

#include "ainf/adjoint.hpp"
#include "ainf/fixtures.hpp"
#include "ainf/functors.hpp"
#include "ainf/homotopy.hpp"
#include "ainf/obstruction.hpp"

using namespace ainf;

namespace {

RingRef f7() { return Ring::integers_mod(7); }

std::vector<AlgebraRef> algebras(std::size_t n) {
  Rng rng(42);
  std::vector<AlgebraRef> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_curved_algebra(rng, f7(), 4, true));
  return out;
}

// Range(0): word length cap, Range(1): worker threads.
void BM_RelationBB(benchmark::State& state) {
  auto as = algebras(8);
  set_worker_count(static_cast<unsigned>(state.range(1)));
  for (auto _ : state)
    for (const auto& a : as) benchmark::DoNotOptimize(check_relation_BB(*a, static_cast<int>(state.range(0))));
  set_worker_count(1);
}
BENCHMARK(BM_RelationBB)->Args({3, 1})->Args({4, 1})->Args({4, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_RelationCrossCancel(benchmark::State& state) {
  auto as = algebras(8);
  set_worker_count(static_cast<unsigned>(state.range(1)));
  for (auto _ : state)
    for (const auto& a : as) benchmark::DoNotOptimize(check_relation_bB(*a, static_cast<int>(state.range(0))));
  set_worker_count(1);
}
BENCHMARK(BM_RelationCrossCancel)->Args({3, 1})->Args({4, 1})->Args({4, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_UCurvature(benchmark::State& state) {
  auto as = algebras(4);
  for (auto _ : state)
    for (const auto& a : as) {
      UeAlgebra u(a);
      benchmark::DoNotOptimize(check_u_curvature(u, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_UCurvature)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_QEquivalence(benchmark::State& state) {
  Rng rng(43);
  auto p = random_pair(rng, f7(), true, 4);
  for (auto _ : state) benchmark::DoNotOptimize(check_q_equivalence(q_module(p.module), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QEquivalence)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_InvertHomotopy(benchmark::State& state) {
  Rng rng(44);
  auto f = random_quasi_iso(rng, f7(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(invert_homotopy(f.phi, f.psi, f.h, f.l, 3));
}
BENCHMARK(BM_InvertHomotopy)->Unit(benchmark::kMillisecond);

void BM_BarTransfer(benchmark::State& state) {
  auto in = dual_numbers_transfer(f7());
  for (auto _ : state) benchmark::DoNotOptimize(bar_transfer_contraction(in, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BarTransfer)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
