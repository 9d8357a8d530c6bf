#include <benchmark/benchmark.h>

#include "gcore/attacks.hpp"

namespace {

void BM_InterceptResendSerial(benchmark::State& state) {
  gcore::Family fam(3, 2);
  gcore::AttackConfig attack;
  gcore::ControlKey key = gcore::ControlKey::from_string(2, "001011");
  int units = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = gcore::intercept_resend_serial(fam, key, attack, units, 42);
    benchmark::DoNotOptimize(rep.bob_label_error_rate);
  }
  state.SetItemsProcessed(state.iterations() * units);
}

void BM_InterceptResendParallel(benchmark::State& state) {
  gcore::Family fam(3, 2);
  gcore::AttackConfig attack;
  gcore::ControlKey key = gcore::ControlKey::from_string(2, "001011");
  int units = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = gcore::intercept_resend(fam, key, attack, units, 42);
    benchmark::DoNotOptimize(rep.bob_label_error_rate);
  }
  state.SetItemsProcessed(state.iterations() * units);
}

}  // namespace

BENCHMARK(BM_InterceptResendSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_InterceptResendParallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
