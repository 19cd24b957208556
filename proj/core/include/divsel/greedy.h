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

#ifndef DIVSEL_GREEDY_H_
#define DIVSEL_GREEDY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "divsel/data_model.h"
#include "divsel/info_theory.h"
#include "divsel/objective.h"

namespace divsel {

// Greedy scores a candidate u by  w * relevance_scale * (g(S+u) - g(S))
//                                 + diversity_scale * sum_{x in S} d(x, u)
// with w = 1. AltGreedy uses w = 1/2; only the relevance marginal is halved.
enum class GreedyVariant { kGreedy, kAltGreedy };

const char* VariantName(GreedyVariant variant);

// Scores closer than this are ties; ties go to the smallest feature id.
inline constexpr double kTieTolerance = 1e-12;

// The candidate maximizing the unweighted g({u}) = sum over labels of
// MI(u, label). Throws DomainError on an empty candidate set.
FeatureId SelectFirst(std::span<const FeatureId> candidates,
                      const ObjectiveConfig& cfg);

// Selects min(k, |candidates|) features in selection order. The result only
// depends on the candidate *set*, never on its enumeration order.
std::vector<FeatureId> GreedySelect(std::span<const FeatureId> candidates,
                                    int k, GreedyVariant variant,
                                    const ObjectiveConfig& cfg,
                                    InfoCache& cache);

// Empirical check of the two niceness properties of Greedy on one instance.
struct NicenessReport {
  std::vector<FeatureId> selected;
  double objective = 0.0;  // h(selected)
  std::size_t rejected = 0;
  // max over rejected t of (h(S + t) - h(S)) / (h(S) / k); bounded by 5.
  double max_gain_ratio = 0.0;
  FeatureId worst_gain_element = 0;
  // max over rejected t of sum_{x in S} diversity_scale * d(t, x)
  // divided by h(S) / (k - 1); bounded by 4.5.
  double max_distance_ratio = 0.0;
  FeatureId worst_distance_element = 0;
  // Re-running without any single rejected element reproduces `selected`.
  bool removal_stable = true;
  std::vector<FeatureId> unstable_elements;
};

// Requires k >= 10 and more candidates than k.
NicenessReport NicenessWitness(std::span<const FeatureId> candidates, int k,
                               const ObjectiveConfig& cfg, InfoCache& cache);

}  // namespace divsel

#endif  // DIVSEL_GREEDY_H_
