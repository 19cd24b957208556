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

#include "divsel/partition_stream.h"

#include <string>
#include <unordered_set>
#include <utility>

#include "divsel/errors.h"

namespace divsel {

std::vector<ColumnPtr> DatasetPartitionStream::Read(
    std::span<const FeatureId> ids) {
  std::vector<ColumnPtr> out;
  out.reserve(ids.size());
  for (FeatureId id : ids) {
    if (id >= data_.num_features()) {
      throw DomainError("unknown feature id " + std::to_string(id));
    }
    out.push_back(data_.feature_ptr(id));
  }
  return out;
}

DenseCsvPartitionStream::DenseCsvPartitionStream(std::filesystem::path path,
                                                 DenseCsvOptions options)
    : path_(std::move(path)), options_(std::move(options)) {
  if (options_.label_count == 0) {
    throw DomainError("label count must be positive");
  }
  options_.binning.Validate();
  DenseCsvLayout layout = ScanDenseCsv(path_, options_.has_header);
  if (options_.label_count >= layout.columns) {
    throw ValidationError(path_.string() + ": " +
                          std::to_string(layout.columns) + " columns and " +
                          std::to_string(options_.label_count) +
                          " label columns leave no features");
  }
  n_ = layout.rows;
  const std::size_t d = layout.columns - options_.label_count;
  for (std::size_t c = 0; c < layout.columns; ++c) {
    std::string name = options_.has_header
                           ? layout.header[c]
                           : (c < d ? "f" + std::to_string(c + 1)
                                    : "l" + std::to_string(c - d));
    (c < d ? feature_names_ : label_names_).push_back(std::move(name));
  }

  std::vector<std::size_t> label_columns;
  for (std::size_t c = d; c < layout.columns; ++c) label_columns.push_back(c);
  std::vector<std::vector<double>> raw =
      ReadDenseCsvColumns(path_, options_.has_header, label_columns);
  for (auto& values : raw) {
    labels_.push_back(
        std::make_shared<const DiscreteColumn>(DiscreteColumn::FromValues(values)));
  }
  // Reuse the dataset invariants (binary labels, unique names, equal
  // lengths) without holding any feature column.
  Dataset(std::vector<std::string>{}, std::vector<ColumnPtr>{}, label_names_,
          labels_, n_,
          DatasetOptions{.permissive_labels = options_.permissive_labels});
  std::unordered_set<std::string> seen;
  for (const std::string& name : feature_names_) {
    if (!seen.insert(name).second) {
      throw ValidationError("duplicate feature name '" + name + "'");
    }
  }
}

std::vector<ColumnPtr> DenseCsvPartitionStream::Read(
    std::span<const FeatureId> ids) {
  std::vector<std::size_t> columns;
  columns.reserve(ids.size());
  for (FeatureId id : ids) {
    if (id >= feature_names_.size()) {
      throw DomainError("unknown feature id " + std::to_string(id));
    }
    columns.push_back(id);
  }
  ++passes_;
  std::vector<std::vector<double>> raw =
      ReadDenseCsvColumns(path_, options_.has_header, columns);
  std::vector<ColumnPtr> out;
  out.reserve(raw.size());
  for (auto& values : raw) {
    out.push_back(std::make_shared<const DiscreteColumn>(
        Discretize(values, options_.binning)));
    std::vector<double>().swap(values);
  }
  return out;
}

}  // namespace divsel
