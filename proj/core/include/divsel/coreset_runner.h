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

#ifndef DIVSEL_CORESET_RUNNER_H_
#define DIVSEL_CORESET_RUNNER_H_

// Centralized, distributed (core-set) and streaming selection pipelines.
//
// The distributed pipeline partitions the features uniformly at random over
// m simulated machines, runs Greedy on every machine independently, and runs
// AltGreedy on the union of the per-machine core-sets. Machines are worker
// threads sharing the immutable dataset; each owns its own distance cache.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divsel/data_model.h"
#include "divsel/greedy.h"
#include "divsel/objective.h"
#include "divsel/partition_stream.h"

namespace divsel {

struct PartitionPlan {
  int machines = 1;
  std::uint64_t seed = 0;
  // Machine index of every feature.
  std::vector<std::uint32_t> assignment;

  // Feature ids per machine, ascending within each machine.
  std::vector<std::vector<FeatureId>> Parts() const;
  std::size_t LargestPart() const;
};

// Every feature independently picks a machine uniformly at random.
PartitionPlan RandomPartition(std::size_t d, int machines, std::uint64_t seed);

// ceil(sqrt(d / k)).
int DefaultMachineCount(std::size_t d, int k);

struct SelectionParams {
  int k = 10;
  double lambda = 0.5;
  int p = 10;
};

struct DistributedOptions {
  // 0 selects DefaultMachineCount(d, k).
  int machines = 0;
  std::uint64_t seed = 0;
  // Worker threads for the map phase; 0 uses the hardware concurrency.
  int parallelism = 1;
};

enum class RunMode { kCentralized, kDistributed, kStreaming };

const char* RunModeName(RunMode mode);

struct PhaseTimings {
  double partition_ms = 0.0;
  // Centralized runs report the MI precomputation here.
  double map_ms = 0.0;
  double reduce_ms = 0.0;
  double total_ms = 0.0;
};

struct RunReport {
  RunMode mode = RunMode::kCentralized;
  // Algorithm of the final selection step.
  GreedyVariant algorithm = GreedyVariant::kAltGreedy;
  SelectionParams params;
  std::uint64_t seed = 0;
  int parallelism = 1;
  std::optional<int> bins;

  std::vector<FeatureId> selected;
  std::vector<std::string> selected_names;
  ObjectiveValue objective;
  PhaseTimings timings;

  std::optional<PartitionPlan> plan;
  // Per-machine core-sets, in machine order.
  std::vector<std::vector<FeatureId>> coresets;
  // Streaming only: most feature columns held at any one time.
  std::optional<std::size_t> peak_retained_columns;
};

RunReport CentralizedSelect(const Dataset& data, const SelectionParams& params,
                            GreedyVariant variant);

RunReport DistributedSelect(const Dataset& data, const SelectionParams& params,
                            const DistributedOptions& options);

// Same result as DistributedSelect with the same seed and machine count, but
// partitions are processed one after another and only the core-set columns
// survive each partition.
RunReport StreamingSelect(PartitionStream& source,
                          const SelectionParams& params,
                          const DistributedOptions& options);

}  // namespace divsel

#endif  // DIVSEL_CORESET_RUNNER_H_
