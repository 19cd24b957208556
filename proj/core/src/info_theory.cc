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

#include "divsel/info_theory.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <mutex>
#include <string>

#include "divsel/errors.h"

namespace divsel {
namespace {

void CheckPair(const DiscreteColumn& a, const DiscreteColumn& b) {
  if (a.size() != b.size()) {
    throw DomainError("column lengths differ (" + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()) + ")");
  }
  if (a.size() == 0) throw DomainError("empty column");
}

double Log(double x, LogBase base) {
  return base == LogBase::kTwo ? std::log2(x) : std::log(x);
}

// Small tables (the common case of low-cardinality columns) are counted on
// the stack.
constexpr std::size_t kStackCells = 256;

double JointEntropyImpl(const DiscreteColumn& a, const DiscreteColumn& b,
                        LogBase base) {
  const std::size_t cols = b.cardinality();
  const std::size_t cells = a.cardinality() * cols;
  std::span<const Code> ca = a.codes();
  std::span<const Code> cb = b.codes();
  if (cells <= kStackCells) {
    std::array<std::uint32_t, kStackCells> counts{};
    for (std::size_t r = 0; r < ca.size(); ++r) {
      ++counts[static_cast<std::size_t>(ca[r]) * cols + cb[r]];
    }
    return EntropyFromCounts(std::span(counts.data(), cells), ca.size(), base);
  }
  ContingencyTable table(a, b);
  std::vector<std::uint32_t> counts(table.cells().begin(),
                                    table.cells().end());
  return EntropyFromCounts(counts, table.total(), base);
}

double EntropyImpl(const DiscreteColumn& col, LogBase base) {
  if (col.size() == 0) throw DomainError("empty column");
  std::vector<std::uint32_t> counts(col.cardinality(), 0);
  for (Code c : col.codes()) ++counts[c];
  return EntropyFromCounts(counts, col.size(), base);
}

}  // namespace

ContingencyTable::ContingencyTable(const DiscreteColumn& a,
                                   const DiscreteColumn& b)
    : rows_(a.cardinality()), cols_(b.cardinality()), total_(a.size()) {
  CheckPair(a, b);
  counts_.assign(rows_ * cols_, 0);
  std::span<const Code> ca = a.codes();
  std::span<const Code> cb = b.codes();
  for (std::size_t r = 0; r < ca.size(); ++r) {
    ++counts_[static_cast<std::size_t>(ca[r]) * cols_ + cb[r]];
  }
}

double EntropyFromCounts(std::span<std::uint32_t> counts, std::size_t total,
                         LogBase base) {
  if (total == 0) throw DomainError("entropy of an empty sample");
  std::sort(counts.begin(), counts.end());
  const double n = static_cast<double>(total);
  double h = 0.0;
  for (std::uint32_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * Log(p, base);
  }
  return h > 0.0 ? h : 0.0;
}

double Entropy(const DiscreteColumn& col, LogBase base) {
  return EntropyImpl(col, base);
}

double JointEntropy(const DiscreteColumn& a, const DiscreteColumn& b,
                    LogBase base) {
  CheckPair(a, b);
  return JointEntropyImpl(a, b, base);
}

double MutualInformation(const DiscreteColumn& a, const DiscreteColumn& b,
                         LogBase base) {
  CheckPair(a, b);
  const double mi = Entropy(a, base) + Entropy(b, base) -
                    JointEntropyImpl(a, b, base);
  return mi > 0.0 ? mi : 0.0;
}

double NviFromEntropies(double h_a, double h_b, double h_ab) {
  if (h_ab <= 0.0) return 0.0;
  double mi = h_a + h_b - h_ab;
  if (mi < 0.0) mi = 0.0;
  const double d = 1.0 - mi / h_ab;
  return std::clamp(d, 0.0, 1.0);
}

double NormalizedMiFromEntropies(double h_a, double h_b, double h_ab) {
  if (h_a <= 0.0 || h_b <= 0.0) return 0.0;
  double mi = h_a + h_b - h_ab;
  if (mi < 0.0) mi = 0.0;
  return std::clamp(mi / std::sqrt(h_a * h_b), 0.0, 1.0);
}

double NviDistance(const DiscreteColumn& a, const DiscreteColumn& b,
                   LogBase base) {
  CheckPair(a, b);
  return NviFromEntropies(Entropy(a, base), Entropy(b, base),
                          JointEntropyImpl(a, b, base));
}

double NormalizedMi(const DiscreteColumn& a, const DiscreteColumn& b,
                    LogBase base) {
  CheckPair(a, b);
  return NormalizedMiFromEntropies(Entropy(a, base), Entropy(b, base),
                                   JointEntropyImpl(a, b, base));
}

InfoCache::InfoCache(const Dataset& data)
    : InfoCache([&data](FeatureId id) -> const DiscreteColumn& {
        if (id >= data.num_features()) {
          throw DomainError("unknown feature id " + std::to_string(id));
        }
        return data.feature(id);
      }) {}

InfoCache::InfoCache(ColumnLookup lookup)
    : lookup_(std::move(lookup)),
      entropy_shards_(std::make_unique<Shard[]>(kShards)),
      joint_shards_(std::make_unique<Shard[]>(kShards)) {}

std::uint64_t InfoCache::PairKey(FeatureId a, FeatureId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

double InfoCache::Entropy(FeatureId id) {
  Shard& shard = entropy_shards_[id % kShards];
  {
    std::shared_lock lock(shard.mu);
    auto it = shard.values.find(id);
    if (it != shard.values.end()) return it->second;
  }
  const double h = EntropyImpl(lookup_(id), LogBase::kTwo);
  std::unique_lock lock(shard.mu);
  return shard.values.emplace(id, h).first->second;
}

double InfoCache::JointEntropyOf(FeatureId a, FeatureId b) {
  const std::uint64_t key = PairKey(a, b);
  Shard& shard = joint_shards_[(key ^ (key >> 29)) % kShards];
  {
    std::shared_lock lock(shard.mu);
    auto it = shard.values.find(key);
    if (it != shard.values.end()) return it->second;
  }
  const DiscreteColumn& ca = lookup_(a);
  const DiscreteColumn& cb = lookup_(b);
  CheckPair(ca, cb);
  const double h = JointEntropyImpl(ca, cb, LogBase::kTwo);
  std::unique_lock lock(shard.mu);
  return shard.values.emplace(key, h).first->second;
}

double InfoCache::Distance(FeatureId a, FeatureId b) {
  if (a == b) {
    lookup_(a);  // still reject unknown ids
    return 0.0;
  }
  return NviFromEntropies(Entropy(a), Entropy(b), JointEntropyOf(a, b));
}

double InfoCache::UncachedDistance(FeatureId a, FeatureId b) {
  if (a == b) return Distance(a, b);
  const DiscreteColumn& ca = lookup_(a);
  const DiscreteColumn& cb = lookup_(b);
  CheckPair(ca, cb);
  return NviFromEntropies(Entropy(a), Entropy(b),
                          JointEntropyImpl(ca, cb, LogBase::kTwo));
}

double InfoCache::NormalizedMi(FeatureId a, FeatureId b) {
  if (a == b) {
    return NormalizedMiFromEntropies(Entropy(a), Entropy(a), Entropy(a));
  }
  return NormalizedMiFromEntropies(Entropy(a), Entropy(b),
                                   JointEntropyOf(a, b));
}

std::size_t InfoCache::cached_pairs() const {
  std::size_t total = 0;
  for (std::size_t s = 0; s < kShards; ++s) {
    std::shared_lock lock(joint_shards_[s].mu);
    total += joint_shards_[s].values.size();
  }
  return total;
}

}  // namespace divsel
