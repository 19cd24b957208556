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

#include "divsel/metrics.h"

#include <fstream>
#include <istream>
#include <string>

#include "divsel/errors.h"

namespace divsel {

PredictionMatrix::PredictionMatrix(std::size_t rows, std::size_t cols,
                                   std::vector<std::uint8_t> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_) {
    throw DomainError("prediction matrix has " +
                      std::to_string(values_.size()) + " cells, expected " +
                      std::to_string(rows_ * cols_));
  }
}

PredictionMatrix PredictionMatrix::FromRows(
    const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<std::uint8_t> values;
  values.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw DomainError("ragged prediction rows");
    for (int v : row) {
      if (v != 0 && v != 1) throw DomainError("prediction cells must be 0 or 1");
      values.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return PredictionMatrix(rows.size(), cols, std::move(values));
}

PredictionMatrix ParsePredictionMatrix(std::istream& in,
                                       std::string_view source) {
  const std::string src(source);
  std::vector<std::uint8_t> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t count = 0;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = line.find(',', start);
      std::string cell = line.substr(
          start, comma == std::string::npos ? std::string::npos
                                            : comma - start);
      const auto first = cell.find_first_not_of(" \t");
      const auto last = cell.find_last_not_of(" \t");
      cell = first == std::string::npos ? "" : cell.substr(first, last - first + 1);
      if (cell != "0" && cell != "1") {
        throw ParseError(src, line_no,
                         "expected 0 or 1, got '" + cell + "' in column " +
                             std::to_string(count + 1));
      }
      values.push_back(cell == "1" ? 1 : 0);
      ++count;
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (rows == 0) {
      cols = count;
    } else if (count != cols) {
      throw ParseError(src, line_no,
                       "row has " + std::to_string(count) +
                           " cells, expected " + std::to_string(cols));
    }
    ++rows;
  }
  return PredictionMatrix(rows, cols, std::move(values));
}

PredictionMatrix LoadPredictionMatrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return ParsePredictionMatrix(in, path.string());
}

MultilabelScores MultilabelMetrics(const PredictionMatrix& truth,
                                   const PredictionMatrix& predicted) {
  if (truth.rows() != predicted.rows() || truth.cols() != predicted.cols()) {
    throw DomainError(
        "truth is " + std::to_string(truth.rows()) + "x" +
        std::to_string(truth.cols()) + " but predictions are " +
        std::to_string(predicted.rows()) + "x" +
        std::to_string(predicted.cols()));
  }
  const std::size_t n = truth.rows();
  const std::size_t t = truth.cols();
  if (n == 0 || t == 0) throw DomainError("empty prediction matrix");

  MultilabelScores s;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t both = 0, either = 0, true_count = 0, pred_count = 0;
    for (std::size_t j = 0; j < t; ++j) {
      const bool a = truth.at(i, j);
      const bool b = predicted.at(i, j);
      both += a && b;
      either += a || b;
      true_count += a;
      pred_count += b;
    }
    s.subset_accuracy += (both == either) ? 1.0 : 0.0;
    s.example_accuracy +=
        either == 0 ? 1.0 : static_cast<double>(both) / either;
    s.example_f += (true_count + pred_count) == 0
                       ? 1.0
                       : 2.0 * both / (true_count + pred_count);
  }
  s.subset_accuracy /= n;
  s.example_accuracy /= n;
  s.example_f /= n;

  std::size_t pooled_both = 0, pooled_total = 0;
  for (std::size_t j = 0; j < t; ++j) {
    std::size_t both = 0, true_count = 0, pred_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool a = truth.at(i, j);
      const bool b = predicted.at(i, j);
      both += a && b;
      true_count += a;
      pred_count += b;
    }
    s.label_avg_f += (true_count + pred_count) == 0
                         ? 1.0
                         : 2.0 * both / (true_count + pred_count);
    pooled_both += both;
    pooled_total += true_count + pred_count;
  }
  s.label_avg_f /= t;
  s.pooled_f =
      pooled_total == 0 ? 1.0 : 2.0 * pooled_both / pooled_total;
  return s;
}

}  // namespace divsel
