// Serial against OpenMP step on a binary rule over {0..n-1}.

#include <benchmark/benchmark.h>

#include "deriv/step.hpp"

namespace {

deriv::RuleSystem<deriv::Natural> modular_sum(std::size_t n) {
  using deriv::Natural;
  std::vector<deriv::Rule<Natural>> rules;
  rules.emplace_back("zero", 0, [](std::span<const Natural>) -> std::optional<Natural> { return Natural(0); });
  rules.emplace_back("sum", 2, [n](std::span<const Natural> xs) -> std::optional<Natural> {
    return Natural((xs[0] + xs[1] + 1) % n);
  });
  return deriv::RuleSystem<Natural>("residues", std::move(rules));
}

deriv::FiniteSet<deriv::Natural> first(std::size_t n) {
  deriv::FiniteSet<deriv::Natural> s;
  for (std::size_t i = 0; i < n; ++i) s.insert(deriv::Natural(i));
  return s;
}

void BM_StepSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sys = modular_sum(n);
  const auto x = first(n);
  for (auto _ : state) benchmark::DoNotOptimize(deriv::step_serial(sys, x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

void BM_StepParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sys = modular_sum(n);
  const auto x = first(n);
  for (auto _ : state) benchmark::DoNotOptimize(deriv::step_parallel(sys, x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

}  // namespace

BENCHMARK(BM_StepSerial)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK(BM_StepParallel)->RangeMultiplier(4)->Range(16, 1024);

BENCHMARK_MAIN();
