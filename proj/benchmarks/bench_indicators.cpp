#include "prc/audit.hpp"
#include "prc/evolution.hpp"
#include "prc/scoring.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace prc;

Dataset make_dataset(std::int64_t n_papers, int owners) {
  std::mt19937_64 rng(n_papers);
  std::uniform_int_distribution<std::int64_t> c_dist(0, 20);
  std::uniform_int_distribution<int> owner_dist(1, owners);
  Dataset d;
  d.label = "bench";
  for (std::int64_t i = 1; i <= n_papers; ++i) {
    const std::int64_t citations = std::min(c_dist(rng), c_dist(rng));
    d.papers.push_back(
        Paper{i, "O" + std::to_string(owner_dist(rng)), citations});
  }
  return d;
}

void bm_weigh_discrete(benchmark::State& state) {
  const Dataset d = make_dataset(state.range(0), 8);
  const ClassScheme scheme = ClassScheme::six_pr();
  const auto policy = ScoringPolicy::discrete(CountingRule::StrictLess,
                                              TiePolicy::AverageWeight);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weigh(d, scheme, policy));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_weigh_discrete)->Range(64, 65536);

void bm_weigh_fractional(benchmark::State& state) {
  const Dataset d = make_dataset(state.range(0), 8);
  const ClassScheme scheme = ClassScheme::six_pr();
  const auto policy = ScoringPolicy::fractional();
  for (auto _ : state) {
    benchmark::DoNotOptimize(weigh(d, scheme, policy));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_weigh_fractional)->Range(64, 65536);

void bm_per_owner_report(benchmark::State& state) {
  const Dataset d = make_dataset(state.range(0), 32);
  const ClassScheme scheme = ClassScheme::six_pr();
  const auto policy =
      ScoringPolicy::discrete(CountingRule::StrictLess, TiePolicy::LowestRank);
  for (auto _ : state) {
    benchmark::DoNotOptimize(per_owner_report(d, scheme, policy));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_per_owner_report)->Range(64, 65536);

void bm_scenario_replay(benchmark::State& state) {
  SynthConfig config;
  config.steps = static_cast<int>(state.range(0));
  config.initial_papers = 50;
  const Scenario scenario = synth_scenario(7, config);
  for (auto _ : state) {
    benchmark::DoNotOptimize(replay(scenario));
  }
}
BENCHMARK(bm_scenario_replay)->Range(8, 512);

void bm_strict_independence_audit(benchmark::State& state) {
  SynthConfig config;
  config.steps = static_cast<int>(state.range(0));
  const Scenario scenario = synth_scenario(11, config);
  const ClassScheme scheme = ClassScheme::six_pr();
  const auto policy =
      ScoringPolicy::discrete(CountingRule::StrictLess, TiePolicy::LowestRank);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        strict_independence_violations(scenario, scheme, policy));
  }
}
BENCHMARK(bm_strict_independence_audit)->Range(8, 128);

}  // namespace

BENCHMARK_MAIN();
