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

#include "divsel/oracle.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <thread>

#include "divsel/errors.h"
#include "divsel/greedy.h"

namespace divsel {
namespace {

struct Best {
  std::vector<std::size_t> indices;
  double value = -std::numeric_limits<double>::infinity();
  unsigned long long evaluated = 0;
};

// Dense views of the candidate distances and MI rows so the enumeration does
// not touch the cache.
struct Instance {
  std::size_t m = 0;
  std::size_t labels = 0;
  std::vector<double> distance;  // m x m
  std::vector<double> mi;        // m x labels
};

double Score(const Instance& inst, const std::vector<std::size_t>& idx,
             const ObjectiveConfig& cfg, std::vector<double>& scratch) {
  double diversity = 0.0;
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const double* row = &inst.distance[idx[a] * inst.m];
    for (std::size_t b = a + 1; b < idx.size(); ++b) diversity += row[idx[b]];
  }
  const std::size_t take =
      std::min(idx.size(), static_cast<std::size_t>(cfg.p()));
  double relevance = 0.0;
  scratch.resize(idx.size());
  for (std::size_t l = 0; l < inst.labels; ++l) {
    for (std::size_t a = 0; a < idx.size(); ++a) {
      scratch[a] = inst.mi[idx[a] * inst.labels + l];
    }
    std::partial_sort(scratch.begin(), scratch.begin() + take, scratch.end(),
                      std::greater<>());
    for (std::size_t a = 0; a < take; ++a) relevance += scratch[a];
  }
  return cfg.relevance_scale() * relevance + cfg.diversity_scale() * diversity;
}

// All k-subsets whose smallest index is `lead`, in lexicographic order.
Best EnumerateFrom(const Instance& inst, std::size_t lead, std::size_t k,
                   const ObjectiveConfig& cfg) {
  Best best;
  std::vector<std::size_t> idx(k);
  idx[0] = lead;
  for (std::size_t a = 1; a < k; ++a) idx[a] = lead + a;
  std::vector<double> scratch;
  while (true) {
    const double value = Score(inst, idx, cfg, scratch);
    ++best.evaluated;
    if (value > best.value) {
      best.value = value;
      best.indices = idx;
    }
    // Next combination of positions 1..k-1; position 0 stays at `lead`.
    std::size_t pos = k;
    bool advanced = false;
    while (pos > 1) {
      --pos;
      if (idx[pos] < inst.m - (k - pos)) {
        advanced = true;
        break;
      }
    }
    if (!advanced) return best;
    ++idx[pos];
    for (std::size_t a = pos + 1; a < k; ++a) idx[a] = idx[a - 1] + 1;
  }
}

double Ratio(double value, double optimum) {
  if (optimum <= 0.0) return 1.0;
  return std::clamp(value / optimum, 0.0, 1.0);
}

}  // namespace

unsigned long long BinomialCoefficient(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const unsigned long long factor = n - k + i;
    // result * factor / i is exact at every step.
    if (result > std::numeric_limits<unsigned long long>::max() / factor) {
      return std::numeric_limits<unsigned long long>::max();
    }
    result = result * factor / i;
  }
  return result;
}

OracleResult BruteForceOpt(std::span<const FeatureId> candidates, int k,
                           const ObjectiveConfig& cfg, InfoCache& cache,
                           const OracleOptions& options) {
  if (k < 1) throw DomainError("k must be at least 1");
  std::vector<FeatureId> ids(candidates.begin(), candidates.end());
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw DomainError("candidate set contains a repeated id");
  }
  const auto kk = static_cast<std::size_t>(k);
  if (kk > ids.size()) {
    throw DomainError("k = " + std::to_string(k) + " exceeds the " +
                      std::to_string(ids.size()) + " candidates");
  }
  const unsigned long long required = BinomialCoefficient(ids.size(), kk);
  if (required > options.budget) {
    throw BudgetExceededError(required, options.budget);
  }

  Instance inst;
  inst.m = ids.size();
  inst.labels = cfg.num_labels();
  inst.distance.assign(inst.m * inst.m, 0.0);
  for (std::size_t a = 0; a < inst.m; ++a) {
    for (std::size_t b = a + 1; b < inst.m; ++b) {
      const double dist = cache.Distance(ids[a], ids[b]);
      inst.distance[a * inst.m + b] = dist;
      inst.distance[b * inst.m + a] = dist;
    }
    std::span<const double> row = cfg.mi().row(ids[a]);
    inst.mi.insert(inst.mi.end(), row.begin(), row.end());
  }

  const std::size_t leads = inst.m - kk + 1;
  std::vector<Best> shards(leads);
  const std::size_t workers = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(options.parallelism, 1)), 1, leads);
  if (workers == 1) {
    for (std::size_t lead = 0; lead < leads; ++lead) {
      shards[lead] = EnumerateFrom(inst, lead, kk, cfg);
    }
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t lead = w; lead < leads; lead += workers) {
          shards[lead] = EnumerateFrom(inst, lead, kk, cfg);
        }
      });
    }
  }

  OracleResult result;
  Best best;
  for (const Best& shard : shards) {
    result.evaluated += shard.evaluated;
    if (shard.value > best.value) best = shard;
  }
  for (std::size_t i : best.indices) result.best.push_back(ids[i]);
  result.value = best.value;
  return result;
}

ApproximationReport MakeApproximationReport(
    const Dataset& data, const SelectionParams& params, int machines,
    std::span<const std::uint64_t> seeds, const OracleOptions& options) {
  const std::size_t d = data.num_features();
  if (params.k < 1 || static_cast<std::size_t>(params.k) > d) {
    throw DomainError("k must lie in [1, feature count]");
  }
  if (data.n() == 0) throw DomainError("dataset has no instances");
  const unsigned long long required =
      BinomialCoefficient(d, static_cast<std::size_t>(params.k));
  if (required > options.budget) {
    throw BudgetExceededError(required, options.budget);
  }

  ApproximationReport report;
  report.features = d;
  report.params = params;
  report.machines = machines > 0 ? machines : DefaultMachineCount(d, params.k);

  auto mi = std::make_shared<const MiTable>(BuildMiTable(data));
  const ObjectiveConfig cfg =
      ObjectiveConfig::Weighted(params.lambda, params.p, params.k, mi);
  InfoCache cache(data);
  const std::vector<FeatureId> all = data.AllFeatureIds();

  OracleResult opt = BruteForceOpt(all, params.k, cfg, cache, options);
  report.optimum = opt.best;
  report.optimum_value = opt.value;

  report.greedy_value = HValue(
      GreedySelect(all, params.k, GreedyVariant::kGreedy, cfg, cache), cfg,
      cache);
  report.altgreedy_value = HValue(
      GreedySelect(all, params.k, GreedyVariant::kAltGreedy, cfg, cache), cfg,
      cache);
  report.greedy_ratio = Ratio(report.greedy_value, opt.value);
  report.altgreedy_ratio = Ratio(report.altgreedy_value, opt.value);
  report.altgreedy_bound_holds =
      report.altgreedy_value >= kAltGreedyBound * opt.value - kBoundSlack;

  report.distributed_bound_holds = true;
  double sum = 0.0;
  report.min_distributed_ratio = 1.0;
  for (std::uint64_t seed : seeds) {
    RunReport run = DistributedSelect(
        data, params,
        DistributedOptions{
            .machines = report.machines, .seed = seed, .parallelism = 1});
    const double value = HValue(run.selected, cfg, cache);
    const double ratio = Ratio(value, opt.value);
    report.seeds.push_back(seed);
    report.distributed_values.push_back(value);
    report.distributed_ratios.push_back(ratio);
    sum += ratio;
    report.min_distributed_ratio = std::min(report.min_distributed_ratio, ratio);
    if (value < kDistributedBound * opt.value - kBoundSlack) {
      report.distributed_bound_holds = false;
    }
  }
  report.mean_distributed_ratio =
      seeds.empty() ? 0.0 : sum / static_cast<double>(seeds.size());
  if (seeds.empty()) report.min_distributed_ratio = 0.0;
  return report;
}

}  // namespace divsel
