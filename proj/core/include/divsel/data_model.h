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

#ifndef DIVSEL_DATA_MODEL_H_
#define DIVSEL_DATA_MODEL_H_

// Column-oriented, immutable multi-label datasets: loading, discretization
// and synthetic generation.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace divsel {

using FeatureId = std::uint32_t;
using Code = std::uint16_t;

// Largest number of distinct categories a single column may carry.
inline constexpr std::size_t kMaxCardinality = 65536;

// One feature or label: a category code per instance. Codes are always dense,
// i.e. the set of codes present is exactly {0, ..., cardinality - 1}.
class DiscreteColumn {
 public:
  DiscreteColumn() = default;

  // Maps the distinct values onto 0..cardinality-1 in ascending order.
  static DiscreteColumn FromValues(std::span<const double> values);
  static DiscreteColumn FromCodes(std::span<const std::uint32_t> codes);

  std::span<const Code> codes() const { return codes_; }
  std::size_t size() const { return codes_.size(); }
  std::size_t cardinality() const { return cardinality_; }
  Code operator[](std::size_t i) const { return codes_[i]; }

  friend bool operator==(const DiscreteColumn&,
                         const DiscreteColumn&) = default;

 private:
  DiscreteColumn(std::vector<Code> codes, std::size_t cardinality)
      : codes_(std::move(codes)), cardinality_(cardinality) {}

  std::vector<Code> codes_;
  std::size_t cardinality_ = 0;
};

// Columns are shared, never copied, between a dataset, its workers and the
// streaming master.
using ColumnPtr = std::shared_ptr<const DiscreteColumn>;

struct DatasetOptions {
  // Accept label columns with more than two categories.
  bool permissive_labels = false;
};

// Feature columns (the ground set) plus label columns over n instances.
// Immutable after construction; safe for any number of concurrent readers.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<std::string> feature_names,
          std::vector<ColumnPtr> features,
          std::vector<std::string> label_names, std::vector<ColumnPtr> labels,
          std::size_t n, DatasetOptions options = {});

  std::size_t n() const { return n_; }
  std::size_t num_features() const { return features_.size(); }
  std::size_t num_labels() const { return labels_.size(); }

  const DiscreteColumn& feature(FeatureId id) const { return *features_[id]; }
  const ColumnPtr& feature_ptr(FeatureId id) const { return features_[id]; }
  const DiscreteColumn& label(std::size_t j) const { return *labels_[j]; }
  const ColumnPtr& label_ptr(std::size_t j) const { return labels_[j]; }

  const std::vector<ColumnPtr>& features() const { return features_; }
  const std::vector<ColumnPtr>& labels() const { return labels_; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }
  const std::vector<std::string>& label_names() const { return label_names_; }

  // All feature ids, ascending.
  std::vector<FeatureId> AllFeatureIds() const;

 private:
  std::vector<std::string> feature_names_;
  std::vector<ColumnPtr> features_;
  std::vector<std::string> label_names_;
  std::vector<ColumnPtr> labels_;
  std::size_t n_ = 0;
};

struct BinningSpec {
  enum class Strategy { kEqualFrequency, kEqualWidth, kNone };

  Strategy strategy = Strategy::kEqualFrequency;
  int bins = 5;
  // Numeric columns with at most this many distinct values are kept as is.
  std::size_t max_raw_categories = 32;

  // Throws DomainError when bins < 2 for a binning strategy.
  void Validate() const;
};

// Turns raw numeric observations into a DiscreteColumn. Columns with few
// distinct values are canonicalized; the rest are binned per `spec`.
// Equal-frequency cut points are the values at ranks ceil(j*n/bins), so tied
// values always share a bin.
DiscreteColumn Discretize(std::span<const double> values,
                          const BinningSpec& spec);

struct DenseCsvOptions {
  // The last `label_count` columns are labels.
  std::size_t label_count = 1;
  bool has_header = false;
  BinningSpec binning;
  bool permissive_labels = false;
};

// Comma separated, unquoted, optional single header row, "\n" or "\r\n"
// line endings. Blank lines are skipped.
Dataset LoadDenseCsv(const std::filesystem::path& path,
                     const DenseCsvOptions& options);
Dataset ParseDenseCsv(std::istream& in, const DenseCsvOptions& options,
                      std::string_view source = "<stream>");

struct DenseCsvLayout {
  std::size_t columns = 0;
  std::size_t rows = 0;
  std::vector<std::string> header;  // empty when the file has none
};

// Validates every row of a dense CSV and reports its shape without keeping
// any cell values.
DenseCsvLayout ScanDenseCsv(const std::filesystem::path& path, bool has_header);

// Raw values of the requested column indices (in request order) from a dense
// CSV. Only the requested columns are held in memory.
std::vector<std::vector<double>> ReadDenseCsvColumns(
    const std::filesystem::path& path, bool has_header,
    std::span<const std::size_t> columns);

struct SparseOptions {
  std::size_t n_features = 0;
  std::size_t n_labels = 0;
  BinningSpec binning;
};

// Lines of the form "<l1,l2,...> <j>:<v> <j>:<v> ..." with 0-based label ids
// and strictly increasing 1-based feature indices. Absent features read as 0.
Dataset LoadSparseMultilabel(const std::filesystem::path& path,
                             const SparseOptions& options);
Dataset ParseSparseMultilabel(std::istream& in, const SparseOptions& options,
                              std::string_view source = "<stream>");

// Writes codes (features then labels) as a dense CSV.
void WriteDenseCsv(const Dataset& data, std::ostream& out, bool header = true);

// 8 binary labels over 256 instances. Every label owns two original binary
// features, one matching it on exactly half of the instances and one on
// exactly a quarter, each repeated 50 times (800 features). Feature order is
// label-major: for label l, ids 100*l .. 100*l+49 are the half-agreeing
// copies and 100*l+50 .. 100*l+99 the quarter-agreeing ones.
Dataset GenerateSynthesized(std::uint64_t seed);

inline constexpr std::size_t kSynthLabels = 8;
inline constexpr std::size_t kSynthInstances = 256;
inline constexpr std::size_t kSynthRepeats = 50;

struct RandomDatasetSpec {
  std::size_t features = 20;
  std::size_t instances = 64;
  std::size_t labels = 2;
  // Feature cardinalities are drawn from [2, max_cardinality].
  std::size_t max_cardinality = 4;
  // Probability that a feature cell is replaced by noise instead of being
  // derived from the feature's parent (a label or an earlier feature).
  double noise = 0.3;
};

// Random correlated dataset: each feature derives from a random label or
// earlier feature and is perturbed by noise, which yields a spread of
// distances and relevance values.
Dataset GenerateRandom(const RandomDatasetSpec& spec, std::uint64_t seed);

}  // namespace divsel

#endif  // DIVSEL_DATA_MODEL_H_
