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

#include "divsel/coreset_runner.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_map>

#include "divsel/errors.h"

namespace divsel {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void CheckRun(std::size_t d, std::size_t n, std::size_t t,
              const SelectionParams& params) {
  if (params.k < 1) {
    throw DomainError("k must be at least 1, got " + std::to_string(params.k));
  }
  if (d < static_cast<std::size_t>(params.k)) {
    throw DomainError("k = " + std::to_string(params.k) +
                      " exceeds the feature count " + std::to_string(d));
  }
  if (n == 0) throw DomainError("dataset has no instances");
  if (t == 0) throw DomainError("dataset has no labels");
}

int ResolveParallelism(int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Runs fn(task) for task in [0, tasks) on up to `workers` threads. The first
// exception thrown by any task is rethrown after all workers finish.
template <typename Fn>
void ParallelFor(std::size_t tasks, int workers, Fn&& fn) {
  const std::size_t threads =
      std::min<std::size_t>(tasks, static_cast<std::size_t>(workers));
  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// Live feature-column count of the streaming runner.
class ColumnRetention {
 public:
  void Acquire(std::size_t count) {
    live_ += count;
    peak_ = std::max(peak_, live_);
  }
  void Release(std::size_t count) { live_ -= count; }
  std::size_t peak() const { return peak_; }

 private:
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

std::vector<FeatureId> Union(const std::vector<std::vector<FeatureId>>& sets) {
  std::vector<FeatureId> all;
  for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

const char* RunModeName(RunMode mode) {
  switch (mode) {
    case RunMode::kCentralized:
      return "centralized";
    case RunMode::kDistributed:
      return "distributed";
    case RunMode::kStreaming:
      return "streaming";
  }
  return "unknown";
}

std::vector<std::vector<FeatureId>> PartitionPlan::Parts() const {
  std::vector<std::vector<FeatureId>> parts(static_cast<std::size_t>(machines));
  for (std::size_t id = 0; id < assignment.size(); ++id) {
    parts[assignment[id]].push_back(static_cast<FeatureId>(id));
  }
  return parts;
}

std::size_t PartitionPlan::LargestPart() const {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(machines), 0);
  for (std::uint32_t m : assignment) ++sizes[m];
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

PartitionPlan RandomPartition(std::size_t d, int machines,
                              std::uint64_t seed) {
  if (machines < 1) {
    throw DomainError("machine count must be at least 1, got " +
                      std::to_string(machines));
  }
  if (d < 1) throw DomainError("cannot partition an empty feature set");
  PartitionPlan plan;
  plan.machines = machines;
  plan.seed = seed;
  plan.assignment.resize(d);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(
      0, static_cast<std::uint32_t>(machines - 1));
  for (auto& m : plan.assignment) m = pick(rng);
  return plan;
}

int DefaultMachineCount(std::size_t d, int k) {
  if (k < 1) throw DomainError("k must be at least 1");
  const auto kk = static_cast<std::size_t>(k);
  if (d < kk) {
    throw DomainError("feature count " + std::to_string(d) +
                      " is smaller than k = " + std::to_string(k));
  }
  // Smallest m with m * m * k >= d, i.e. ceil(sqrt(d / k)) without rounding
  // surprises.
  auto m = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(d) / static_cast<double>(kk))));
  while (m > 1 && (m - 1) * (m - 1) * kk >= d) --m;
  while (m * m * kk < d) ++m;
  return static_cast<int>(std::max<std::size_t>(m, 1));
}

RunReport CentralizedSelect(const Dataset& data, const SelectionParams& params,
                            GreedyVariant variant) {
  CheckRun(data.num_features(), data.n(), data.num_labels(), params);
  const Clock::time_point start = Clock::now();
  RunReport report;
  report.mode = RunMode::kCentralized;
  report.algorithm = variant;
  report.params = params;

  Clock::time_point phase = Clock::now();
  auto mi = std::make_shared<const MiTable>(BuildMiTable(data));
  const ObjectiveConfig cfg =
      ObjectiveConfig::Weighted(params.lambda, params.p, params.k, mi);
  report.timings.map_ms = MillisSince(phase);

  phase = Clock::now();
  InfoCache cache(data);
  report.selected =
      GreedySelect(data.AllFeatureIds(), params.k, variant, cfg, cache);
  report.timings.reduce_ms = MillisSince(phase);

  report.objective = Evaluate(report.selected, cfg, cache);
  for (FeatureId id : report.selected) {
    report.selected_names.push_back(data.feature_names()[id]);
  }
  report.timings.total_ms = MillisSince(start);
  return report;
}

RunReport DistributedSelect(const Dataset& data, const SelectionParams& params,
                            const DistributedOptions& options) {
  CheckRun(data.num_features(), data.n(), data.num_labels(), params);
  const Clock::time_point start = Clock::now();
  const std::size_t d = data.num_features();
  RunReport report;
  report.mode = RunMode::kDistributed;
  report.algorithm = GreedyVariant::kAltGreedy;
  report.params = params;
  report.seed = options.seed;
  report.parallelism = ResolveParallelism(options.parallelism);
  const int machines = options.machines > 0
                           ? options.machines
                           : DefaultMachineCount(d, params.k);

  Clock::time_point phase = Clock::now();
  report.plan = RandomPartition(d, machines, options.seed);
  const std::vector<std::vector<FeatureId>> parts = report.plan->Parts();
  report.timings.partition_ms = MillisSince(phase);

  // Each machine fills the MI rows of its own features; rows are disjoint.
  auto mi = std::make_shared<MiTable>(d, data.num_labels());
  const ObjectiveConfig cfg =
      ObjectiveConfig::Weighted(params.lambda, params.p, params.k, mi);

  phase = Clock::now();
  report.coresets.assign(parts.size(), {});
  ParallelFor(parts.size(), report.parallelism, [&](std::size_t machine) {
    const std::vector<FeatureId>& part = parts[machine];
    if (part.empty()) return;
    for (FeatureId id : part) {
      mi->SetRow(id, MiRow(data.feature(id), data.labels()));
    }
    InfoCache cache(data);
    report.coresets[machine] =
        GreedySelect(part, params.k, GreedyVariant::kGreedy, cfg, cache);
  });
  report.timings.map_ms = MillisSince(phase);

  phase = Clock::now();
  InfoCache master_cache(data);
  const std::vector<FeatureId> pooled = Union(report.coresets);
  report.selected = GreedySelect(pooled, params.k, GreedyVariant::kAltGreedy,
                                 cfg, master_cache);
  report.objective = Evaluate(report.selected, cfg, master_cache);
  report.timings.reduce_ms = MillisSince(phase);

  for (FeatureId id : report.selected) {
    report.selected_names.push_back(data.feature_names()[id]);
  }
  report.timings.total_ms = MillisSince(start);
  return report;
}

RunReport StreamingSelect(PartitionStream& source,
                          const SelectionParams& params,
                          const DistributedOptions& options) {
  const std::size_t d = source.num_features();
  CheckRun(d, source.n(), source.labels().size(), params);
  const Clock::time_point start = Clock::now();
  RunReport report;
  report.mode = RunMode::kStreaming;
  report.algorithm = GreedyVariant::kAltGreedy;
  report.params = params;
  report.seed = options.seed;
  report.parallelism = 1;
  const int machines = options.machines > 0
                           ? options.machines
                           : DefaultMachineCount(d, params.k);

  Clock::time_point phase = Clock::now();
  report.plan = RandomPartition(d, machines, options.seed);
  const std::vector<std::vector<FeatureId>> parts = report.plan->Parts();
  report.timings.partition_ms = MillisSince(phase);

  auto mi = std::make_shared<MiTable>(d, source.labels().size());
  const ObjectiveConfig cfg =
      ObjectiveConfig::Weighted(params.lambda, params.p, params.k, mi);

  ColumnRetention retention;
  std::unordered_map<FeatureId, ColumnPtr> survivors;
  phase = Clock::now();
  report.coresets.assign(parts.size(), {});
  for (std::size_t machine = 0; machine < parts.size(); ++machine) {
    const std::vector<FeatureId>& part = parts[machine];
    if (part.empty()) continue;
    std::unordered_map<FeatureId, ColumnPtr> window;
    {
      std::vector<ColumnPtr> columns = source.Read(part);
      for (std::size_t i = 0; i < part.size(); ++i) {
        window.emplace(part[i], std::move(columns[i]));
      }
    }
    retention.Acquire(part.size());
    for (FeatureId id : part) {
      mi->SetRow(id, MiRow(*window.at(id), source.labels()));
    }
    InfoCache cache([&window](FeatureId id) -> const DiscreteColumn& {
      auto it = window.find(id);
      if (it == window.end()) {
        throw DomainError("feature " + std::to_string(id) +
                          " is not in the current partition");
      }
      return *it->second;
    });
    report.coresets[machine] =
        GreedySelect(part, params.k, GreedyVariant::kGreedy, cfg, cache);
    for (FeatureId id : report.coresets[machine]) {
      survivors.emplace(id, window.at(id));
    }
    window.clear();
    retention.Release(part.size() - report.coresets[machine].size());
  }
  report.timings.map_ms = MillisSince(phase);

  phase = Clock::now();
  InfoCache master_cache([&survivors](FeatureId id) -> const DiscreteColumn& {
    auto it = survivors.find(id);
    if (it == survivors.end()) {
      throw DomainError("feature " + std::to_string(id) + " was not retained");
    }
    return *it->second;
  });
  const std::vector<FeatureId> pooled = Union(report.coresets);
  report.selected = GreedySelect(pooled, params.k, GreedyVariant::kAltGreedy,
                                 cfg, master_cache);
  report.objective = Evaluate(report.selected, cfg, master_cache);
  report.timings.reduce_ms = MillisSince(phase);

  for (FeatureId id : report.selected) {
    report.selected_names.push_back(source.feature_name(id));
  }
  report.peak_retained_columns = retention.peak();
  report.timings.total_ms = MillisSince(start);
  return report;
}

}  // namespace divsel
