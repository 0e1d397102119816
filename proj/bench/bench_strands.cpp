#include <benchmark/benchmark.h>

#include "koszul/harness.hpp"

using namespace koszul;

namespace {

// Differential d_step of the resolution of k over R(a).
struct Fixture {
  QuotientRing R;
  GradedMatrix m;
  int bound;
};

const Fixture& fixture(int a, int step) {
  static std::map<std::pair<int, int>, Fixture> cache;
  auto it = cache.find({a, step});
  if (it != cache.end()) return it->second;
  QuotientRing R(roos_algebra(roos_ring(), a));
  ResolutionOptions o;
  o.hmax = step;
  Resolution res = quotient_resolution(ModuleKind::ResidueField, R, o);
  GradedMatrix m = res.differentials.at(step - 1);
  const int bound = m.source().max_twist() + 2;
  return cache.emplace(std::make_pair(a, step), Fixture{R, m, bound}).first->second;
}

void BM_StrandParallel(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    StrandRing ring(f.R);
    benchmark::DoNotOptimize(strand_syzygies(f.m, ring, f.bound, Execution::Parallel));
  }
}

void BM_StrandSerialExecution(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    StrandRing ring(f.R);
    benchmark::DoNotOptimize(strand_syzygies(f.m, ring, f.bound, Execution::Serial));
  }
}

void BM_StrandSerialReference(benchmark::State& state) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    StrandRing ring(f.R);
    benchmark::DoNotOptimize(strand_syzygies_serial(f.m, ring, f.bound));
  }
}

void BM_ResolveResidueField(benchmark::State& state) {
  QuotientRing R(roos_algebra(roos_ring(), 2));
  ResolutionOptions o;
  o.hmax = static_cast<int>(state.range(0));
  o.exec = state.range(1) ? Execution::Parallel : Execution::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(quotient_resolution(ModuleKind::ResidueField, R, o));
}

void BM_DeltaSearch(benchmark::State& state) {
  Ideal I = roos_algebra(roos_ring(), 2);
  DeltaBudget b{static_cast<std::size_t>(state.range(0)), 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(delta_upper_bound(I, b, 0));
}

}  // namespace

BENCHMARK(BM_StrandParallel)->Args({2, 3})->Args({2, 4})->Args({3, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StrandSerialExecution)->Args({2, 3})->Args({2, 4})->Args({3, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StrandSerialReference)->Args({2, 3})->Args({2, 4})->Args({3, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ResolveResidueField)->Args({5, 1})->Args({5, 0})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DeltaSearch)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
