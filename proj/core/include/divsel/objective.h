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

#ifndef DIVSEL_OBJECTIVE_H_
#define DIVSEL_OBJECTIVE_H_

// The selection objective
//
//   h(S) = relevance_scale * g(S) + diversity_scale * D(S)
//
// where D(S) sums the NVI distance over unordered pairs of S and
// g(S) = sum over labels of the p largest normalized MI(x, label), x in S.
// The experiment weighting uses diversity_scale = lambda and
// relevance_scale = (1 - lambda) * C(k, 2) / (p * |L|); the plain f = D + g
// is the special case with both scales equal to 1.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "divsel/data_model.h"
#include "divsel/info_theory.h"

namespace divsel {

// Normalized MI(feature, label) for every feature x label, row-major by
// feature. Rows may be filled incrementally (streaming) but each row is
// written once, before it is read.
class MiTable {
 public:
  MiTable(std::size_t features, std::size_t labels);

  std::size_t num_features() const { return features_; }
  std::size_t num_labels() const { return labels_; }

  double at(FeatureId f, std::size_t label) const {
    return values_[static_cast<std::size_t>(f) * labels_ + label];
  }
  // Throws DomainError for an id outside the table.
  std::span<const double> row(FeatureId f) const;
  void SetRow(FeatureId f, std::span<const double> values);

 private:
  std::size_t features_;
  std::size_t labels_;
  std::vector<double> values_;
};

std::vector<double> MiRow(const DiscreteColumn& feature,
                          std::span<const ColumnPtr> labels);
MiTable BuildMiTable(const Dataset& data);

class ObjectiveConfig {
 public:
  // Weighted objective with trade-off lambda in [0, 1].
  static ObjectiveConfig Weighted(double lambda, int p, int k,
                                  std::shared_ptr<const MiTable> mi);
  // f(S) = D(S) + g(S).
  static ObjectiveConfig Unweighted(int p, int k,
                                    std::shared_ptr<const MiTable> mi);
  // Arbitrary non-negative scales, not both zero.
  static ObjectiveConfig Scaled(double diversity_scale, double relevance_scale,
                                int p, int k,
                                std::shared_ptr<const MiTable> mi);

  // Normalization factor C(k, 2) / (p * |L|) that balances the two terms.
  // C(k, 2) is taken as 1 when k == 1 so that relevance still counts.
  static double NormalizationCoefficient(int k, int p, std::size_t labels);

  double lambda() const { return lambda_; }
  int p() const { return p_; }
  int k() const { return k_; }
  std::size_t num_labels() const { return mi_->num_labels(); }
  double relevance_scale() const { return relevance_scale_; }
  double diversity_scale() const { return diversity_scale_; }
  const MiTable& mi() const { return *mi_; }
  const std::shared_ptr<const MiTable>& mi_ptr() const { return mi_; }

 private:
  ObjectiveConfig(double lambda, int p, int k, double diversity_scale,
                  double relevance_scale, std::shared_ptr<const MiTable> mi);

  double lambda_;
  int p_;
  int k_;
  double diversity_scale_;
  double relevance_scale_;
  std::shared_ptr<const MiTable> mi_;
};

// Per label, the p largest MI values of the selected features.
class TopPTracker {
 public:
  TopPTracker(std::size_t labels, int p);

  void Add(std::span<const double> mi_row);
  // g(S + x) - g(S) for a feature with the given MI row.
  double Marginal(std::span<const double> mi_row) const;
  // p-th largest stored value for the label, 0 while fewer than p stored.
  double Threshold(std::size_t label) const;
  double Value() const;
  std::size_t size() const { return added_; }

 private:
  int p_;
  std::size_t added_ = 0;
  std::vector<std::vector<double>> heaps_;  // min-heaps of size <= p
  std::vector<double> sums_;
};

// D(S) over unordered pairs. Throws DomainError on unknown or repeated ids.
double Diversity(std::span<const FeatureId> s, InfoCache& cache);
// Unweighted g(S).
double RelevanceG(std::span<const FeatureId> s, const ObjectiveConfig& cfg);

struct ObjectiveValue {
  double diversity = 0.0;       // D(S)
  double relevance = 0.0;       // g(S)
  double diversity_term = 0.0;  // diversity_scale * D(S)
  double relevance_term = 0.0;  // relevance_scale * g(S)
  double h = 0.0;
};

ObjectiveValue Evaluate(std::span<const FeatureId> s,
                        const ObjectiveConfig& cfg, InfoCache& cache);
double HValue(std::span<const FeatureId> s, const ObjectiveConfig& cfg,
              InfoCache& cache);

// Incremental state of a greedy run over a fixed candidate set: running
// distance sums to the chosen set for every candidate, the per-label top-p
// trackers, and the current objective value. Single owner.
class SelectionState {
 public:
  SelectionState(std::span<const FeatureId> candidates,
                 const ObjectiveConfig& cfg, InfoCache& cache);

  // Candidates sorted ascending; positions index this vector.
  const std::vector<FeatureId>& candidates() const { return candidates_; }
  const std::vector<FeatureId>& selected() const { return selected_; }

  // Returns the candidate position of `id`; DomainError if absent.
  std::size_t PositionOf(FeatureId id) const;
  bool is_selected_at(std::size_t pos) const { return chosen_[pos] != 0; }

  void Select(FeatureId id);
  void SelectAt(std::size_t pos);

  // g(S + x) - g(S); DomainError if x is already selected.
  double MarginalG(FeatureId x) const;
  double MarginalGAt(std::size_t pos) const;

  // Sum of d(x, u) over the selected x.
  double DistSum(FeatureId u) const { return dist_sum_[PositionOf(u)]; }
  double DistSumAt(std::size_t pos) const { return dist_sum_[pos]; }

  double objective_value() const { return objective_; }
  double diversity_value() const { return diversity_; }
  double relevance_value() const { return tracker_.Value(); }
  const TopPTracker& tracker() const { return tracker_; }

 private:
  const ObjectiveConfig& cfg_;
  InfoCache& cache_;
  std::vector<FeatureId> candidates_;
  std::vector<char> chosen_;
  std::vector<double> dist_sum_;
  std::vector<FeatureId> selected_;
  TopPTracker tracker_;
  double diversity_ = 0.0;
  double objective_ = 0.0;
};

}  // namespace divsel

#endif  // DIVSEL_OBJECTIVE_H_
