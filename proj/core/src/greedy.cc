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

#include "divsel/greedy.h"

#include <algorithm>
#include <limits>
#include <string>

#include "divsel/errors.h"

namespace divsel {
namespace {

double Ratio(double numerator, double denominator) {
  if (denominator > 0.0) return numerator / denominator;
  return numerator > kTieTolerance ? std::numeric_limits<double>::infinity()
                                   : 0.0;
}

}  // namespace

const char* VariantName(GreedyVariant variant) {
  return variant == GreedyVariant::kGreedy ? "greedy" : "altgreedy";
}

FeatureId SelectFirst(std::span<const FeatureId> candidates,
                      const ObjectiveConfig& cfg) {
  if (candidates.empty()) throw DomainError("no candidates to select from");
  std::vector<FeatureId> ids(candidates.begin(), candidates.end());
  std::sort(ids.begin(), ids.end());
  FeatureId best = ids.front();
  double best_score = -1.0;
  for (FeatureId id : ids) {
    double score = 0.0;
    for (double v : cfg.mi().row(id)) score += v;
    if (score > best_score + kTieTolerance) {
      best_score = score;
      best = id;
    }
  }
  return best;
}

std::vector<FeatureId> GreedySelect(std::span<const FeatureId> candidates,
                                    int k, GreedyVariant variant,
                                    const ObjectiveConfig& cfg,
                                    InfoCache& cache) {
  if (k < 1) throw DomainError("k must be at least 1, got " + std::to_string(k));
  if (candidates.empty()) throw DomainError("no candidates to select from");

  SelectionState state(candidates, cfg, cache);
  const std::size_t target =
      std::min(static_cast<std::size_t>(k), state.candidates().size());
  const double relevance_weight =
      (variant == GreedyVariant::kAltGreedy ? 0.5 : 1.0) *
      cfg.relevance_scale();
  const double diversity_weight = cfg.diversity_scale();

  state.Select(SelectFirst(state.candidates(), cfg));
  const std::size_t count = state.candidates().size();
  while (state.selected().size() < target) {
    std::size_t best = count;
    double best_score = 0.0;
    for (std::size_t pos = 0; pos < count; ++pos) {
      if (state.is_selected_at(pos)) continue;
      const double score = relevance_weight * state.MarginalGAt(pos) +
                           diversity_weight * state.DistSumAt(pos);
      if (best == count || score > best_score + kTieTolerance) {
        best = pos;
        best_score = score;
      }
    }
    state.SelectAt(best);
  }
  return state.selected();
}

NicenessReport NicenessWitness(std::span<const FeatureId> candidates, int k,
                               const ObjectiveConfig& cfg, InfoCache& cache) {
  if (k < 10) {
    throw DomainError("niceness holds for k >= 10, got k = " +
                      std::to_string(k));
  }
  if (candidates.size() <= static_cast<std::size_t>(k)) {
    throw DomainError("niceness needs more candidates than k");
  }
  std::vector<FeatureId> all(candidates.begin(), candidates.end());
  std::sort(all.begin(), all.end());

  NicenessReport report;
  report.selected = GreedySelect(all, k, GreedyVariant::kGreedy, cfg, cache);
  report.objective = HValue(report.selected, cfg, cache);

  std::vector<FeatureId> chosen = report.selected;
  std::sort(chosen.begin(), chosen.end());
  std::vector<FeatureId> rejected;
  std::set_difference(all.begin(), all.end(), chosen.begin(), chosen.end(),
                      std::back_inserter(rejected));
  report.rejected = rejected.size();

  const double per_element = report.objective / k;
  const double per_pair = report.objective / (k - 1);
  std::vector<FeatureId> extended = report.selected;
  extended.push_back(0);
  for (FeatureId t : rejected) {
    extended.back() = t;
    const double gain = HValue(extended, cfg, cache) - report.objective;
    double distance = 0.0;
    for (FeatureId x : report.selected) distance += cache.Distance(t, x);
    distance *= cfg.diversity_scale();

    const double gain_ratio = Ratio(gain, per_element);
    if (gain_ratio > report.max_gain_ratio) {
      report.max_gain_ratio = gain_ratio;
      report.worst_gain_element = t;
    }
    const double distance_ratio = Ratio(distance, per_pair);
    if (distance_ratio > report.max_distance_ratio) {
      report.max_distance_ratio = distance_ratio;
      report.worst_distance_element = t;
    }

    std::vector<FeatureId> without;
    without.reserve(all.size() - 1);
    for (FeatureId id : all) {
      if (id != t) without.push_back(id);
    }
    if (GreedySelect(without, k, GreedyVariant::kGreedy, cfg, cache) !=
        report.selected) {
      report.removal_stable = false;
      report.unstable_elements.push_back(t);
    }
  }
  return report;
}

}  // namespace divsel
