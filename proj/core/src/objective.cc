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

#include "divsel/objective.h"

#include <algorithm>
#include <functional>
#include <string>

#include "divsel/errors.h"

namespace divsel {
namespace {

std::vector<FeatureId> SortedUnique(std::span<const FeatureId> s) {
  std::vector<FeatureId> ids(s.begin(), s.end());
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw DomainError("feature set contains a repeated id");
  }
  return ids;
}

}  // namespace

MiTable::MiTable(std::size_t features, std::size_t labels)
    : features_(features), labels_(labels), values_(features * labels, 0.0) {}

std::span<const double> MiTable::row(FeatureId f) const {
  if (f >= features_) {
    throw DomainError("unknown feature id " + std::to_string(f));
  }
  return std::span(values_).subspan(static_cast<std::size_t>(f) * labels_,
                                    labels_);
}

void MiTable::SetRow(FeatureId f, std::span<const double> values) {
  if (f >= features_) {
    throw DomainError("unknown feature id " + std::to_string(f));
  }
  if (values.size() != labels_) {
    throw DomainError("MI row has " + std::to_string(values.size()) +
                      " entries, expected " + std::to_string(labels_));
  }
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("normalized MI outside [0, 1]");
    }
  }
  std::copy(values.begin(), values.end(),
            values_.begin() + static_cast<std::ptrdiff_t>(f * labels_));
}

std::vector<double> MiRow(const DiscreteColumn& feature,
                          std::span<const ColumnPtr> labels) {
  std::vector<double> row;
  row.reserve(labels.size());
  for (const ColumnPtr& label : labels) {
    row.push_back(NormalizedMi(feature, *label));
  }
  return row;
}

MiTable BuildMiTable(const Dataset& data) {
  MiTable table(data.num_features(), data.num_labels());
  for (FeatureId f = 0; f < data.num_features(); ++f) {
    table.SetRow(f, MiRow(data.feature(f), data.labels()));
  }
  return table;
}

ObjectiveConfig::ObjectiveConfig(double lambda, int p, int k,
                                 double diversity_scale,
                                 double relevance_scale,
                                 std::shared_ptr<const MiTable> mi)
    : lambda_(lambda),
      p_(p),
      k_(k),
      diversity_scale_(diversity_scale),
      relevance_scale_(relevance_scale),
      mi_(std::move(mi)) {
  if (mi_ == nullptr) throw DomainError("objective needs an MI table");
  if (mi_->num_labels() == 0) throw DomainError("objective needs labels");
  if (p_ < 1) throw DomainError("p must be at least 1");
  if (k_ < 1) throw DomainError("k must be at least 1");
  if (!(diversity_scale_ >= 0.0) || !(relevance_scale_ >= 0.0)) {
    throw DomainError("objective scales must be non-negative");
  }
  if (diversity_scale_ == 0.0 && relevance_scale_ == 0.0) {
    throw DomainError("objective scales are both zero");
  }
}

double ObjectiveConfig::NormalizationCoefficient(int k, int p,
                                                 std::size_t labels) {
  const double pairs =
      std::max(1.0, static_cast<double>(k) * (k - 1) / 2.0);
  return pairs / (static_cast<double>(p) * static_cast<double>(labels));
}

ObjectiveConfig ObjectiveConfig::Weighted(double lambda, int p, int k,
                                          std::shared_ptr<const MiTable> mi) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("lambda must lie in [0, 1]");
  }
  if (mi == nullptr) throw DomainError("objective needs an MI table");
  if (p < 1) throw DomainError("p must be at least 1");
  if (mi->num_labels() == 0) throw DomainError("objective needs labels");
  const double relevance =
      (1.0 - lambda) * NormalizationCoefficient(k, p, mi->num_labels());
  return ObjectiveConfig(lambda, p, k, lambda, relevance, std::move(mi));
}

ObjectiveConfig ObjectiveConfig::Unweighted(int p, int k,
                                            std::shared_ptr<const MiTable> mi) {
  return ObjectiveConfig(0.5, p, k, 1.0, 1.0, std::move(mi));
}

ObjectiveConfig ObjectiveConfig::Scaled(double diversity_scale,
                                        double relevance_scale, int p, int k,
                                        std::shared_ptr<const MiTable> mi) {
  double total = diversity_scale + relevance_scale;
  double lambda = total > 0.0 ? diversity_scale / total : 0.0;
  return ObjectiveConfig(lambda, p, k, diversity_scale, relevance_scale,
                         std::move(mi));
}

TopPTracker::TopPTracker(std::size_t labels, int p)
    : p_(p), heaps_(labels), sums_(labels, 0.0) {
  if (p < 1) throw DomainError("p must be at least 1");
  for (auto& heap : heaps_) heap.reserve(static_cast<std::size_t>(p));
}

void TopPTracker::Add(std::span<const double> mi_row) {
  for (std::size_t l = 0; l < heaps_.size(); ++l) {
    std::vector<double>& heap = heaps_[l];
    const double v = mi_row[l];
    if (heap.size() < static_cast<std::size_t>(p_)) {
      heap.push_back(v);
      std::push_heap(heap.begin(), heap.end(), std::greater<>());
      sums_[l] += v;
    } else if (v > heap.front()) {
      sums_[l] += v - heap.front();
      std::pop_heap(heap.begin(), heap.end(), std::greater<>());
      heap.back() = v;
      std::push_heap(heap.begin(), heap.end(), std::greater<>());
    }
  }
  ++added_;
}

double TopPTracker::Threshold(std::size_t label) const {
  const std::vector<double>& heap = heaps_[label];
  return heap.size() < static_cast<std::size_t>(p_) ? 0.0 : heap.front();
}

double TopPTracker::Marginal(std::span<const double> mi_row) const {
  double gain = 0.0;
  for (std::size_t l = 0; l < heaps_.size(); ++l) {
    const double excess = mi_row[l] - Threshold(l);
    if (excess > 0.0) gain += excess;
  }
  return gain;
}

double TopPTracker::Value() const {
  double g = 0.0;
  for (double s : sums_) g += s;
  return g;
}

double Diversity(std::span<const FeatureId> s, InfoCache& cache) {
  std::vector<FeatureId> ids = SortedUnique(s);
  if (ids.size() == 1) cache.column(ids[0]);  // reject unknown ids
  double total = 0.0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      total += cache.Distance(ids[i], ids[j]);
    }
  }
  return total;
}

double RelevanceG(std::span<const FeatureId> s, const ObjectiveConfig& cfg) {
  std::vector<FeatureId> ids = SortedUnique(s);
  const MiTable& mi = cfg.mi();
  const std::size_t take =
      std::min(ids.size(), static_cast<std::size_t>(cfg.p()));
  double g = 0.0;
  std::vector<double> values(ids.size());
  for (std::size_t l = 0; l < mi.num_labels(); ++l) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      values[i] = mi.row(ids[i])[l];
    }
    std::partial_sort(values.begin(), values.begin() + take, values.end(),
                      std::greater<>());
    for (std::size_t i = 0; i < take; ++i) g += values[i];
  }
  return g;
}

ObjectiveValue Evaluate(std::span<const FeatureId> s,
                        const ObjectiveConfig& cfg, InfoCache& cache) {
  ObjectiveValue v;
  v.diversity = Diversity(s, cache);
  v.relevance = RelevanceG(s, cfg);
  v.diversity_term = cfg.diversity_scale() * v.diversity;
  v.relevance_term = cfg.relevance_scale() * v.relevance;
  v.h = v.relevance_term + v.diversity_term;
  return v;
}

double HValue(std::span<const FeatureId> s, const ObjectiveConfig& cfg,
              InfoCache& cache) {
  return Evaluate(s, cfg, cache).h;
}

SelectionState::SelectionState(std::span<const FeatureId> candidates,
                               const ObjectiveConfig& cfg, InfoCache& cache)
    : cfg_(cfg),
      cache_(cache),
      candidates_(SortedUnique(candidates)),
      chosen_(candidates_.size(), 0),
      dist_sum_(candidates_.size(), 0.0),
      tracker_(cfg.num_labels(), cfg.p()) {
  if (!candidates_.empty() &&
      candidates_.back() >= cfg.mi().num_features()) {
    throw DomainError("unknown feature id " +
                      std::to_string(candidates_.back()));
  }
}

std::size_t SelectionState::PositionOf(FeatureId id) const {
  auto it = std::lower_bound(candidates_.begin(), candidates_.end(), id);
  if (it == candidates_.end() || *it != id) {
    throw DomainError("feature " + std::to_string(id) +
                      " is not a candidate");
  }
  return static_cast<std::size_t>(it - candidates_.begin());
}

void SelectionState::Select(FeatureId id) { SelectAt(PositionOf(id)); }

void SelectionState::SelectAt(std::size_t pos) {
  if (chosen_[pos]) {
    throw DomainError("feature " + std::to_string(candidates_[pos]) +
                      " is already selected");
  }
  const FeatureId id = candidates_[pos];
  std::span<const double> row = cfg_.mi().row(id);
  diversity_ += dist_sum_[pos];
  tracker_.Add(row);
  chosen_[pos] = 1;
  selected_.push_back(id);
  objective_ = cfg_.relevance_scale() * tracker_.Value() +
               cfg_.diversity_scale() * diversity_;
  for (std::size_t v = 0; v < candidates_.size(); ++v) {
    if (v == pos) continue;
    dist_sum_[v] += cache_.UncachedDistance(id, candidates_[v]);
  }
}

double SelectionState::MarginalG(FeatureId x) const {
  return MarginalGAt(PositionOf(x));
}

double SelectionState::MarginalGAt(std::size_t pos) const {
  if (chosen_[pos]) {
    throw DomainError("feature " + std::to_string(candidates_[pos]) +
                      " is already selected");
  }
  return tracker_.Marginal(cfg_.mi().row(candidates_[pos]));
}

}  // namespace divsel
