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

#ifndef DIVSEL_PARTITION_STREAM_H_
#define DIVSEL_PARTITION_STREAM_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "divsel/data_model.h"

namespace divsel {

// Source of feature columns for the streaming runner. Label columns are
// available up front; feature columns are materialized on request, one
// partition at a time.
class PartitionStream {
 public:
  virtual ~PartitionStream() = default;

  virtual std::size_t num_features() const = 0;
  virtual std::size_t n() const = 0;
  virtual const std::vector<ColumnPtr>& labels() const = 0;
  virtual const std::vector<std::string>& label_names() const = 0;
  virtual const std::string& feature_name(FeatureId id) const = 0;

  // Columns for `ids`, in the same order.
  virtual std::vector<ColumnPtr> Read(std::span<const FeatureId> ids) = 0;
};

// Serves columns of an in-memory dataset. The dataset must outlive the
// stream.
class DatasetPartitionStream : public PartitionStream {
 public:
  explicit DatasetPartitionStream(const Dataset& data) : data_(data) {}

  std::size_t num_features() const override { return data_.num_features(); }
  std::size_t n() const override { return data_.n(); }
  const std::vector<ColumnPtr>& labels() const override {
    return data_.labels();
  }
  const std::vector<std::string>& label_names() const override {
    return data_.label_names();
  }
  const std::string& feature_name(FeatureId id) const override {
    return data_.feature_names().at(id);
  }
  std::vector<ColumnPtr> Read(std::span<const FeatureId> ids) override;

 private:
  const Dataset& data_;
};

// Re-reads a dense CSV for every partition and keeps only that partition's
// columns, discretized exactly as LoadDenseCsv would.
class DenseCsvPartitionStream : public PartitionStream {
 public:
  DenseCsvPartitionStream(std::filesystem::path path, DenseCsvOptions options);

  std::size_t num_features() const override { return feature_names_.size(); }
  std::size_t n() const override { return n_; }
  const std::vector<ColumnPtr>& labels() const override { return labels_; }
  const std::vector<std::string>& label_names() const override {
    return label_names_;
  }
  const std::string& feature_name(FeatureId id) const override {
    return feature_names_.at(id);
  }
  std::vector<ColumnPtr> Read(std::span<const FeatureId> ids) override;

  std::size_t passes() const { return passes_; }

 private:
  std::filesystem::path path_;
  DenseCsvOptions options_;
  std::size_t n_ = 0;
  std::vector<std::string> feature_names_;
  std::vector<std::string> label_names_;
  std::vector<ColumnPtr> labels_;
  std::size_t passes_ = 0;
};

}  // namespace divsel

#endif  // DIVSEL_PARTITION_STREAM_H_
