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

#ifndef DIVSEL_INFO_THEORY_H_
#define DIVSEL_INFO_THEORY_H_

// Plug-in (empirical frequency) information measures over discrete columns.
//
// Every entropy is evaluated from integer cell counts summed in ascending
// count order, so H(a,b) and H(b,a) are bit-identical and H(a,a) == H(a).
// That makes nvi_distance exactly symmetric with an exact zero diagonal.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "divsel/data_model.h"

namespace divsel {

enum class LogBase { kTwo, kE };

// Co-occurrence counts of two equal-length columns.
class ContingencyTable {
 public:
  ContingencyTable(const DiscreteColumn& a, const DiscreteColumn& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t total() const { return total_; }
  std::uint32_t count(std::size_t i, std::size_t j) const {
    return counts_[i * cols_ + j];
  }
  std::span<const std::uint32_t> cells() const { return counts_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t total_;
  std::vector<std::uint32_t> counts_;
};

// -sum (c/n) log(c/n) over the non-zero counts, accumulated in ascending
// count order. `counts` is reordered in place.
double EntropyFromCounts(std::span<std::uint32_t> counts, std::size_t total,
                         LogBase base = LogBase::kTwo);

double Entropy(const DiscreteColumn& col, LogBase base = LogBase::kTwo);
double JointEntropy(const DiscreteColumn& a, const DiscreteColumn& b,
                    LogBase base = LogBase::kTwo);
// H(a) + H(b) - H(a,b), clamped at 0.
double MutualInformation(const DiscreteColumn& a, const DiscreteColumn& b,
                         LogBase base = LogBase::kTwo);
// 1 - I(a,b) / H(a,b) in [0, 1]; 0 when both columns are constant.
double NviDistance(const DiscreteColumn& a, const DiscreteColumn& b,
                   LogBase base = LogBase::kTwo);
// I(a,b) / sqrt(H(a) H(b)) in [0, 1]; 0 when either entropy is 0.
double NormalizedMi(const DiscreteColumn& a, const DiscreteColumn& b,
                    LogBase base = LogBase::kTwo);

// The combinations used by the kernels above, exposed so memoized entropies
// produce bit-identical results.
double NviFromEntropies(double h_a, double h_b, double h_ab);
double NormalizedMiFromEntropies(double h_a, double h_b, double h_ab);

// Memoizes per-column entropies and pairwise distances for a set of feature
// columns addressed by FeatureId. Lookups are thread safe; two threads racing
// on the same key may both compute it, and the first insert wins.
class InfoCache {
 public:
  using ColumnLookup = std::function<const DiscreteColumn&(FeatureId)>;

  // Resolves ids against the dataset's feature columns. The dataset must
  // outlive the cache.
  explicit InfoCache(const Dataset& data);
  // `lookup` throws DomainError for unknown ids.
  explicit InfoCache(ColumnLookup lookup);

  InfoCache(const InfoCache&) = delete;
  InfoCache& operator=(const InfoCache&) = delete;

  double Entropy(FeatureId id);
  double Distance(FeatureId a, FeatureId b);
  // Same value as Distance() but the joint entropy is not memoized. For
  // pairs that are visited once, such as in a greedy scan.
  double UncachedDistance(FeatureId a, FeatureId b);
  double NormalizedMi(FeatureId a, FeatureId b);

  const DiscreteColumn& column(FeatureId id) const { return lookup_(id); }

  std::size_t cached_pairs() const;

 private:
  static constexpr std::size_t kShards = 64;

  struct Shard {
    mutable std::shared_mutex mu;
    std::unordered_map<std::uint64_t, double> values;
  };

  static std::uint64_t PairKey(FeatureId a, FeatureId b);
  double JointEntropyOf(FeatureId a, FeatureId b);

  ColumnLookup lookup_;
  std::unique_ptr<Shard[]> entropy_shards_;
  std::unique_ptr<Shard[]> joint_shards_;
};

}  // namespace divsel

#endif  // DIVSEL_INFO_THEORY_H_
