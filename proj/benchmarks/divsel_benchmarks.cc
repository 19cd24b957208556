// Copyright 2026 The divsel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <memory>
#include <random>
#include <vector>

#include "divsel/coreset_runner.h"
#include "divsel/data_model.h"
#include "divsel/greedy.h"
#include "divsel/info_theory.h"
#include "divsel/objective.h"

namespace divsel {
namespace {

DiscreteColumn RandomColumn(std::mt19937_64& rng, std::size_t n,
                            std::uint32_t cardinality) {
  std::uniform_int_distribution<std::uint32_t> pick(0, cardinality - 1);
  std::vector<std::uint32_t> codes(n);
  for (auto& c : codes) c = pick(rng);
  return DiscreteColumn::FromCodes(codes);
}

void BM_NviDistance(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto card = static_cast<std::uint32_t>(state.range(1));
  DiscreteColumn a = RandomColumn(rng, n, card);
  DiscreteColumn b = RandomColumn(rng, n, card);
  for (auto _ : state) benchmark::DoNotOptimize(NviDistance(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n));
}
BENCHMARK(BM_NviDistance)
    ->ArgsProduct({{64, 256, 4096}, {2, 5, 16}})
    ->ArgNames({"n", "card"});

void BM_MiTable(benchmark::State& state) {
  Dataset data = GenerateRandom(
      RandomDatasetSpec{.features = static_cast<std::size_t>(state.range(0)),
                        .instances = 256,
                        .labels = 8},
      2);
  for (auto _ : state) benchmark::DoNotOptimize(BuildMiTable(data));
}
BENCHMARK(BM_MiTable)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_GreedySelect(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  Dataset data = GenerateRandom(
      RandomDatasetSpec{.features = d, .instances = 256, .labels = 8}, 3);
  auto mi = std::make_shared<const MiTable>(BuildMiTable(data));
  auto cfg = ObjectiveConfig::Weighted(0.5, 10, k, mi);
  const auto ids = data.AllFeatureIds();
  for (auto _ : state) {
    InfoCache cache(data);
    benchmark::DoNotOptimize(
        GreedySelect(ids, k, GreedyVariant::kAltGreedy, cfg, cache));
  }
}
BENCHMARK(BM_GreedySelect)
    ->ArgsProduct({{1000, 5000}, {10, 50}})
    ->ArgNames({"d", "k"})
    ->Unit(benchmark::kMillisecond);

// Centralized vs distributed on the synthesized data.
void BM_Centralized(benchmark::State& state) {
  Dataset data = GenerateSynthesized(0);
  const SelectionParams params{.k = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    RunReport r = CentralizedSelect(data, params, GreedyVariant::kAltGreedy);
    state.counters["objective"] = r.objective.h;
  }
}
BENCHMARK(BM_Centralized)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Distributed(benchmark::State& state) {
  Dataset data = GenerateSynthesized(0);
  const SelectionParams params{.k = static_cast<int>(state.range(0))};
  const DistributedOptions options{
      .parallelism = static_cast<int>(state.range(1))};
  for (auto _ : state) {
    RunReport r = DistributedSelect(data, params, options);
    state.counters["objective"] = r.objective.h;
  }
}
BENCHMARK(BM_Distributed)
    ->ArgsProduct({{10, 50}, {1, 4}})
    ->ArgNames({"k", "workers"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace
}  // namespace divsel

BENCHMARK_MAIN();
