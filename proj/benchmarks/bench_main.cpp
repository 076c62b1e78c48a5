#include <benchmark/benchmark.h>

#include "pfsemi/closure.hpp"
#include "pfsemi/representation.hpp"
#include "pfsemi/sweep.hpp"
#include "pfsemi/trans_semigroup.hpp"

namespace {

using namespace pfsemi;

// The largest base-3 extraction with at most `max_m` elements.
AbstractSystem largest_base3(std::size_t max_m) {
  std::optional<AbstractSystem> best;
  for (const auto& phi : enumerate_all(3, true, false)) {
    if (phi.size() <= max_m && (!best || phi.size() > best->size())) {
      best = extract_abstract(phi);
    }
  }
  return *best;
}

void BM_ClosureStep(benchmark::State& state) {
  auto s = largest_base3(std::size_t(state.range(0)));
  ClosureOperator op(s);
  auto h = ElementSet::singleton(s.size(), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(op.step(h));
  }
  state.counters["m"] = double(s.size());
}
BENCHMARK(BM_ClosureStep)->Arg(8)->Arg(16)->Arg(32);

void BM_Chi0(benchmark::State& state) {
  auto s = largest_base3(std::size_t(state.range(0)));
  ClosureOperator op(s);
  for (auto _ : state) {
    benchmark::DoNotOptimize(op.chi0());
  }
  state.counters["m"] = double(s.size());
}
BENCHMARK(BM_Chi0)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Chi0Minimality(benchmark::State& state) {
  auto s = largest_base3(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_chi0_minimality(s));
  }
}
BENCHMARK(BM_Chi0Minimality)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  auto base = std::size_t(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_all(base, true, false));
  }
}
BENCHMARK(BM_Enumerate)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_FindRepresentation(benchmark::State& state) {
  auto s = largest_base3(std::size_t(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_representation(s, {3, false}));
  }
  state.counters["m"] = double(s.size());
}
BENCHMARK(BM_FindRepresentation)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SweepBase2(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(2));
  }
}
BENCHMARK(BM_SweepBase2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
