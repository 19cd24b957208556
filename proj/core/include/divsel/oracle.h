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

#ifndef DIVSEL_ORACLE_H_
#define DIVSEL_ORACLE_H_

// Exhaustive optimum and approximation-ratio harness for small instances.

#include <cstdint>
#include <span>
#include <vector>

#include "divsel/coreset_runner.h"
#include "divsel/data_model.h"
#include "divsel/info_theory.h"
#include "divsel/objective.h"

namespace divsel {

inline constexpr unsigned long long kDefaultEnumerationBudget = 2'000'000;

// C(n, k), saturating at the largest unsigned long long.
unsigned long long BinomialCoefficient(std::size_t n, std::size_t k);

struct OracleOptions {
  unsigned long long budget = kDefaultEnumerationBudget;
  // Shards the enumeration by leading element; the result does not depend on
  // the worker count.
  int parallelism = 1;
};

struct OracleResult {
  std::vector<FeatureId> best;  // ascending
  double value = 0.0;
  unsigned long long evaluated = 0;
};

// argmax h(R) over R subset of candidates with |R| = k. Exact ties resolve to
// the lexicographically smallest id set. Throws BudgetExceededError when
// C(|candidates|, k) exceeds the budget.
OracleResult BruteForceOpt(std::span<const FeatureId> candidates, int k,
                           const ObjectiveConfig& cfg, InfoCache& cache,
                           const OracleOptions& options = {});

struct ApproximationReport {
  std::size_t features = 0;
  SelectionParams params;
  int machines = 1;

  std::vector<FeatureId> optimum;
  double optimum_value = 0.0;
  double greedy_value = 0.0;
  double greedy_ratio = 0.0;
  double altgreedy_value = 0.0;
  double altgreedy_ratio = 0.0;

  std::vector<std::uint64_t> seeds;
  std::vector<double> distributed_values;
  std::vector<double> distributed_ratios;
  double mean_distributed_ratio = 0.0;
  double min_distributed_ratio = 0.0;

  // AltGreedy reaches half of the optimum.
  bool altgreedy_bound_holds = false;
  // Every distributed run reaches 1/31 of the optimum.
  bool distributed_bound_holds = false;
};

inline constexpr double kAltGreedyBound = 0.5;
inline constexpr double kDistributedBound = 1.0 / 31.0;
inline constexpr double kBoundSlack = 1e-9;

// Compares centralized Greedy, centralized AltGreedy and one distributed run
// per seed against the exhaustive optimum over all features.
ApproximationReport MakeApproximationReport(
    const Dataset& data, const SelectionParams& params, int machines,
    std::span<const std::uint64_t> seeds, const OracleOptions& options = {});

}  // namespace divsel

#endif  // DIVSEL_ORACLE_H_
