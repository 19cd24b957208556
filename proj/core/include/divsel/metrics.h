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

#ifndef DIVSEL_METRICS_H_
#define DIVSEL_METRICS_H_

// Multi-label evaluation measures comparing predicted label sets with the
// true ones.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

namespace divsel {

// n instances x t labels of 0/1 membership.
class PredictionMatrix {
 public:
  PredictionMatrix(std::size_t rows, std::size_t cols,
                   std::vector<std::uint8_t> values);
  static PredictionMatrix FromRows(
      const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool at(std::size_t i, std::size_t j) const {
    return values_[i * cols_ + j] != 0;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint8_t> values_;
};

// Dense CSV of 0/1 cells, no header.
PredictionMatrix LoadPredictionMatrix(const std::filesystem::path& path);
PredictionMatrix ParsePredictionMatrix(std::istream& in,
                                       std::string_view source = "<stream>");

// With L_i / P_i the true / predicted label sets of instance i and E_j / F_j
// the true / predicted instance sets of label j:
//   subset_accuracy  = mean_i [L_i == P_i]
//   example_accuracy = mean_i |L_i & P_i| / |L_i | P_i|
//   example_f        = mean_i 2 |L_i & P_i| / (|L_i| + |P_i|)
//   label_avg_f      = mean_j 2 |E_j & F_j| / (|E_j| + |F_j|)
//   pooled_f         = 2 sum_j |E_j & F_j| / (sum_j |E_j| + sum_j |F_j|)
// A term whose denominator is zero (nothing true, nothing predicted) is 1.
struct MultilabelScores {
  double subset_accuracy = 0.0;
  double example_accuracy = 0.0;
  double example_f = 0.0;
  double label_avg_f = 0.0;
  double pooled_f = 0.0;
};

MultilabelScores MultilabelMetrics(const PredictionMatrix& truth,
                                   const PredictionMatrix& predicted);

}  // namespace divsel

#endif  // DIVSEL_METRICS_H_
