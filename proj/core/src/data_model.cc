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

#include "divsel/data_model.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>

#include "divsel/errors.h"

namespace divsel {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

void SplitCells(std::string_view line, std::vector<std::string_view>& cells) {
  cells.clear();
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(Trim(line.substr(start)));
      return;
    }
    cells.push_back(Trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

double ParseNumber(std::string_view cell, std::string_view source,
                   std::size_t line, std::size_t column) {
  if (cell.empty()) {
    throw ParseError(std::string(source), line,
                     "missing value in column " + std::to_string(column + 1));
  }
  std::string_view digits = cell;
  if (digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  auto [end, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || end != digits.data() + digits.size() ||
      !std::isfinite(value)) {
    throw ParseError(std::string(source), line,
                     "non-numeric cell '" + std::string(cell) +
                         "' in column " + std::to_string(column + 1));
  }
  return value;
}

// Streams the rows of a dense CSV, checking that every row has the same
// number of cells. `on_row(line, cells)` sees each data row.
template <typename RowFn>
DenseCsvLayout WalkDenseCsv(std::istream& in, std::string_view source,
                            bool has_header, RowFn&& on_row) {
  DenseCsvLayout layout;
  std::string line;
  std::vector<std::string_view> cells;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = Trim(line);
    if (view.empty()) continue;
    SplitCells(view, cells);
    if (first) {
      first = false;
      layout.columns = cells.size();
      if (has_header) {
        for (std::string_view c : cells) layout.header.emplace_back(c);
        continue;
      }
    }
    if (cells.size() != layout.columns) {
      throw ParseError(std::string(source), line_no,
                       "row has " + std::to_string(cells.size()) +
                           " cells, expected " +
                           std::to_string(layout.columns));
    }
    on_row(line_no, cells);
    ++layout.rows;
  }
  return layout;
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  return in;
}

void CheckUnique(const std::vector<std::string>& names, const char* kind) {
  std::unordered_set<std::string> seen;
  for (const std::string& name : names) {
    if (!seen.insert(name).second) {
      throw ValidationError(std::string("duplicate ") + kind + " name '" +
                            name + "'");
    }
  }
}

Dataset BuildFromRaw(std::vector<std::string> names,
                     std::vector<std::vector<double>> raw,
                     std::size_t label_count, std::size_t n,
                     const BinningSpec& binning, bool permissive_labels) {
  const std::size_t total = raw.size();
  const std::size_t d = total - label_count;
  std::vector<std::string> feature_names(names.begin(), names.begin() + d);
  std::vector<std::string> label_names(names.begin() + d, names.end());
  std::vector<ColumnPtr> features;
  features.reserve(d);
  for (std::size_t c = 0; c < d; ++c) {
    features.push_back(
        std::make_shared<const DiscreteColumn>(Discretize(raw[c], binning)));
    std::vector<double>().swap(raw[c]);
  }
  std::vector<ColumnPtr> labels;
  for (std::size_t c = d; c < total; ++c) {
    labels.push_back(std::make_shared<const DiscreteColumn>(
        DiscreteColumn::FromValues(raw[c])));
  }
  return Dataset(std::move(feature_names), std::move(features),
                 std::move(label_names), std::move(labels), n,
                 DatasetOptions{.permissive_labels = permissive_labels});
}

std::vector<std::string> DefaultNames(std::size_t d, std::size_t t) {
  std::vector<std::string> names;
  names.reserve(d + t);
  for (std::size_t i = 0; i < d; ++i) names.push_back("f" + std::to_string(i + 1));
  for (std::size_t j = 0; j < t; ++j) names.push_back("l" + std::to_string(j));
  return names;
}

}  // namespace

DiscreteColumn DiscreteColumn::FromValues(std::span<const double> values) {
  std::vector<double> distinct(values.begin(), values.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  if (distinct.size() > kMaxCardinality) {
    throw ValidationError("column has " + std::to_string(distinct.size()) +
                          " categories, more than the supported " +
                          std::to_string(kMaxCardinality));
  }
  std::vector<Code> codes(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    codes[i] = static_cast<Code>(
        std::lower_bound(distinct.begin(), distinct.end(), values[i]) -
        distinct.begin());
  }
  return DiscreteColumn(std::move(codes), distinct.size());
}

DiscreteColumn DiscreteColumn::FromCodes(std::span<const std::uint32_t> raw) {
  std::vector<std::uint32_t> distinct(raw.begin(), raw.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  if (distinct.size() > kMaxCardinality) {
    throw ValidationError("column has " + std::to_string(distinct.size()) +
                          " categories, more than the supported " +
                          std::to_string(kMaxCardinality));
  }
  std::vector<Code> codes(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    codes[i] = static_cast<Code>(
        std::lower_bound(distinct.begin(), distinct.end(), raw[i]) -
        distinct.begin());
  }
  return DiscreteColumn(std::move(codes), distinct.size());
}

Dataset::Dataset(std::vector<std::string> feature_names,
                 std::vector<ColumnPtr> features,
                 std::vector<std::string> label_names,
                 std::vector<ColumnPtr> labels, std::size_t n,
                 DatasetOptions options)
    : feature_names_(std::move(feature_names)),
      features_(std::move(features)),
      label_names_(std::move(label_names)),
      labels_(std::move(labels)),
      n_(n) {
  if (feature_names_.size() != features_.size() ||
      label_names_.size() != labels_.size()) {
    throw DomainError("column and name counts differ");
  }
  auto check_column = [&](const ColumnPtr& col, const std::string& name) {
    if (col == nullptr) throw DomainError("column '" + name + "' is null");
    if (col->size() != n_) {
      throw ValidationError("column '" + name + "' has " +
                            std::to_string(col->size()) +
                            " values, expected " + std::to_string(n_));
    }
  };
  for (std::size_t i = 0; i < features_.size(); ++i) {
    check_column(features_[i], feature_names_[i]);
  }
  for (std::size_t j = 0; j < labels_.size(); ++j) {
    check_column(labels_[j], label_names_[j]);
    if (!options.permissive_labels && labels_[j]->cardinality() > 2) {
      throw ValidationError("label '" + label_names_[j] + "' has " +
                            std::to_string(labels_[j]->cardinality()) +
                            " distinct values; labels must be binary");
    }
  }
  CheckUnique(feature_names_, "feature");
  CheckUnique(label_names_, "label");
}

std::vector<FeatureId> Dataset::AllFeatureIds() const {
  std::vector<FeatureId> ids(features_.size());
  std::iota(ids.begin(), ids.end(), FeatureId{0});
  return ids;
}

void BinningSpec::Validate() const {
  if (strategy != Strategy::kNone && bins < 2) {
    throw DomainError("binning needs at least 2 bins, got " +
                      std::to_string(bins));
  }
}

DiscreteColumn Discretize(std::span<const double> values,
                          const BinningSpec& spec) {
  spec.Validate();
  if (spec.strategy == BinningSpec::Strategy::kNone || values.empty()) {
    return DiscreteColumn::FromValues(values);
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t distinct =
      std::unique(sorted.begin(), sorted.end()) - sorted.begin();
  if (distinct <= spec.max_raw_categories) {
    return DiscreteColumn::FromValues(values);
  }

  const std::size_t n = values.size();
  const auto bins = static_cast<std::size_t>(spec.bins);
  std::vector<std::uint32_t> codes(n);
  if (spec.strategy == BinningSpec::Strategy::kEqualFrequency) {
    sorted.assign(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> cuts;
    for (std::size_t j = 1; j < bins; ++j) {
      std::size_t rank = (j * n + bins - 1) / bins;
      if (rank < n) cuts.push_back(sorted[rank]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      codes[i] = static_cast<std::uint32_t>(
          std::upper_bound(cuts.begin(), cuts.end(), values[i]) -
          cuts.begin());
    }
  } else {
    const double lo = sorted.front();
    const double hi = sorted[distinct - 1];
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t bin = 0;
      if (hi > lo) {
        bin = static_cast<std::size_t>(
            std::floor((values[i] - lo) / (hi - lo) * static_cast<double>(bins)));
        bin = std::min(bin, bins - 1);
      }
      codes[i] = static_cast<std::uint32_t>(bin);
    }
  }
  return DiscreteColumn::FromCodes(codes);
}

Dataset ParseDenseCsv(std::istream& in, const DenseCsvOptions& options,
                      std::string_view source) {
  if (options.label_count == 0) {
    throw DomainError("label count must be positive");
  }
  options.binning.Validate();
  std::vector<std::vector<double>> raw;
  DenseCsvLayout layout = WalkDenseCsv(
      in, source, options.has_header,
      [&](std::size_t line, const std::vector<std::string_view>& cells) {
        if (raw.empty()) raw.resize(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) {
          raw[c].push_back(ParseNumber(cells[c], source, line, c));
        }
      });
  raw.resize(layout.columns);
  if (options.label_count >= layout.columns) {
    throw ValidationError(std::string(source) + ": " +
                          std::to_string(layout.columns) + " columns and " +
                          std::to_string(options.label_count) +
                          " label columns leave no features");
  }
  std::vector<std::string> names =
      options.has_header
          ? layout.header
          : DefaultNames(layout.columns - options.label_count,
                         options.label_count);
  return BuildFromRaw(std::move(names), std::move(raw), options.label_count,
                      layout.rows, options.binning,
                      options.permissive_labels);
}

Dataset LoadDenseCsv(const std::filesystem::path& path,
                     const DenseCsvOptions& options) {
  std::ifstream in = OpenOrThrow(path);
  return ParseDenseCsv(in, options, path.string());
}

DenseCsvLayout ScanDenseCsv(const std::filesystem::path& path,
                            bool has_header) {
  std::ifstream in = OpenOrThrow(path);
  const std::string source = path.string();
  return WalkDenseCsv(
      in, source, has_header,
      [&](std::size_t line, const std::vector<std::string_view>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          ParseNumber(cells[c], source, line, c);
        }
      });
}

std::vector<std::vector<double>> ReadDenseCsvColumns(
    const std::filesystem::path& path, bool has_header,
    std::span<const std::size_t> columns) {
  std::ifstream in = OpenOrThrow(path);
  const std::string source = path.string();
  std::vector<std::vector<double>> out(columns.size());
  WalkDenseCsv(
      in, source, has_header,
      [&](std::size_t line, const std::vector<std::string_view>& cells) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
          if (columns[i] >= cells.size()) {
            throw DomainError("column index " + std::to_string(columns[i]) +
                              " out of range for " + source);
          }
          out[i].push_back(
              ParseNumber(cells[columns[i]], source, line, columns[i]));
        }
      });
  return out;
}

Dataset ParseSparseMultilabel(std::istream& in, const SparseOptions& options,
                              std::string_view source) {
  if (options.n_features == 0 || options.n_labels == 0) {
    throw DomainError("sparse format needs positive feature and label counts");
  }
  options.binning.Validate();
  const std::string src(source);
  struct Entry {
    std::size_t row;
    std::size_t feature;
    double value;
  };
  std::vector<Entry> entries;
  std::vector<std::pair<std::size_t, std::size_t>> label_hits;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    const std::size_t line_no = row + 1;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);

    std::vector<std::string_view> tokens;
    std::size_t pos = 0;
    while (pos < view.size()) {
      while (pos < view.size() && (view[pos] == ' ' || view[pos] == '\t')) {
        ++pos;
      }
      std::size_t end = pos;
      while (end < view.size() && view[end] != ' ' && view[end] != '\t') {
        ++end;
      }
      if (end > pos) tokens.push_back(view.substr(pos, end - pos));
      pos = end;
    }

    std::size_t first_feature = 0;
    if (!tokens.empty() && tokens[0].find(':') == std::string_view::npos) {
      first_feature = 1;
      std::string_view field = tokens[0];
      std::size_t start = 0;
      while (start <= field.size()) {
        std::size_t comma = field.find(',', start);
        std::string_view item = field.substr(
            start, comma == std::string_view::npos ? field.npos
                                                   : comma - start);
        std::size_t id = 0;
        auto [end, ec] =
            std::from_chars(item.data(), item.data() + item.size(), id);
        if (item.empty() || ec != std::errc() ||
            end != item.data() + item.size()) {
          throw ParseError(src, line_no,
                           "bad label id '" + std::string(item) + "'");
        }
        if (id >= options.n_labels) {
          throw ParseError(src, line_no,
                           "label id " + std::to_string(id) +
                               " is not below the label count " +
                               std::to_string(options.n_labels));
        }
        label_hits.emplace_back(row, id);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
    }

    std::size_t previous = 0;
    for (std::size_t i = first_feature; i < tokens.size(); ++i) {
      std::string_view token = tokens[i];
      std::size_t colon = token.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError(src, line_no,
                         "expected <index>:<value>, got '" +
                             std::string(token) + "'");
      }
      std::string_view index_text = token.substr(0, colon);
      std::size_t index = 0;
      auto [end, ec] = std::from_chars(
          index_text.data(), index_text.data() + index_text.size(), index);
      if (index_text.empty() || ec != std::errc() ||
          end != index_text.data() + index_text.size() || index == 0) {
        throw ParseError(src, line_no,
                         "bad feature index '" + std::string(index_text) +
                             "'");
      }
      if (index > options.n_features) {
        throw ParseError(src, line_no,
                         "feature index " + std::to_string(index) +
                             " exceeds the feature count " +
                             std::to_string(options.n_features));
      }
      if (index <= previous) {
        throw ParseError(src, line_no,
                         "feature indices must be strictly increasing (" +
                             std::to_string(previous) + " then " +
                             std::to_string(index) + ")");
      }
      previous = index;
      double value = ParseNumber(token.substr(colon + 1), src, line_no, index - 1);
      entries.push_back({row, index - 1, value});
    }
    ++row;
  }

  const std::size_t n = row;
  std::vector<std::vector<double>> raw(options.n_features + options.n_labels,
                                       std::vector<double>(n, 0.0));
  for (const Entry& e : entries) raw[e.feature][e.row] = e.value;
  for (auto [r, id] : label_hits) raw[options.n_features + id][r] = 1.0;
  return BuildFromRaw(DefaultNames(options.n_features, options.n_labels),
                      std::move(raw), options.n_labels, n, options.binning,
                      /*permissive_labels=*/false);
}

Dataset LoadSparseMultilabel(const std::filesystem::path& path,
                             const SparseOptions& options) {
  std::ifstream in = OpenOrThrow(path);
  return ParseSparseMultilabel(in, options, path.string());
}

void WriteDenseCsv(const Dataset& data, std::ostream& out, bool header) {
  const std::size_t d = data.num_features();
  const std::size_t t = data.num_labels();
  if (header) {
    for (std::size_t i = 0; i < d; ++i) {
      if (i > 0) out << ',';
      out << data.feature_names()[i];
    }
    for (std::size_t j = 0; j < t; ++j) out << ',' << data.label_names()[j];
    out << '\n';
  }
  std::string row;
  for (std::size_t r = 0; r < data.n(); ++r) {
    row.clear();
    for (std::size_t i = 0; i < d; ++i) {
      if (i > 0) row.push_back(',');
      row += std::to_string(data.feature(static_cast<FeatureId>(i))[r]);
    }
    for (std::size_t j = 0; j < t; ++j) {
      row.push_back(',');
      row += std::to_string(data.label(j)[r]);
    }
    row.push_back('\n');
    out << row;
  }
}

Dataset GenerateSynthesized(std::uint64_t seed) {
  constexpr std::size_t n = kSynthInstances;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);

  std::vector<std::vector<std::uint32_t>> label_bits(
      kSynthLabels, std::vector<std::uint32_t>(n));
  for (auto& bits : label_bits) {
    for (auto& b : bits) b = coin(rng) ? 1 : 0;
  }

  // Copy of `label` that disagrees with it on exactly `flips` positions.
  auto disagree = [&](const std::vector<std::uint32_t>& label,
                      std::size_t flips) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::uint32_t> out = label;
    for (std::size_t i = 0; i < flips; ++i) out[order[i]] ^= 1u;
    return out;
  };

  std::vector<std::string> feature_names;
  std::vector<ColumnPtr> features;
  std::vector<std::string> label_names;
  std::vector<ColumnPtr> labels;
  for (std::size_t l = 0; l < kSynthLabels; ++l) {
    auto half = std::make_shared<const DiscreteColumn>(
        DiscreteColumn::FromCodes(disagree(label_bits[l], n / 2)));
    auto quarter = std::make_shared<const DiscreteColumn>(
        DiscreteColumn::FromCodes(disagree(label_bits[l], n - n / 4)));
    const std::string prefix = "l" + std::to_string(l);
    for (std::size_t r = 0; r < kSynthRepeats; ++r) {
      feature_names.push_back(prefix + "_half_" + std::to_string(r));
      features.push_back(half);
    }
    for (std::size_t r = 0; r < kSynthRepeats; ++r) {
      feature_names.push_back(prefix + "_quarter_" + std::to_string(r));
      features.push_back(quarter);
    }
    label_names.push_back("label" + std::to_string(l));
    labels.push_back(std::make_shared<const DiscreteColumn>(
        DiscreteColumn::FromCodes(label_bits[l])));
  }
  return Dataset(std::move(feature_names), std::move(features),
                 std::move(label_names), std::move(labels), n);
}

Dataset GenerateRandom(const RandomDatasetSpec& spec, std::uint64_t seed) {
  if (spec.labels == 0) throw DomainError("random dataset needs a label");
  if (spec.max_cardinality < 2) {
    throw DomainError("random dataset needs max_cardinality >= 2");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::bernoulli_distribution noisy(spec.noise);
  std::uniform_int_distribution<std::size_t> arity(2, spec.max_cardinality);

  const std::size_t n = spec.instances;
  std::vector<std::vector<std::uint32_t>> raw;  // labels first, then features
  raw.reserve(spec.labels + spec.features);
  for (std::size_t j = 0; j < spec.labels; ++j) {
    std::vector<std::uint32_t> bits(n);
    for (auto& b : bits) b = coin(rng) ? 1 : 0;
    raw.push_back(std::move(bits));
  }
  for (std::size_t i = 0; i < spec.features; ++i) {
    const std::size_t card = arity(rng);
    std::uniform_int_distribution<std::size_t> pick_parent(0, raw.size() - 1);
    std::uniform_int_distribution<std::uint32_t> pick_code(
        0, static_cast<std::uint32_t>(card - 1));
    const std::vector<std::uint32_t>& parent = raw[pick_parent(rng)];
    std::vector<std::uint32_t> codes(n);
    for (std::size_t r = 0; r < n; ++r) {
      codes[r] = noisy(rng) ? pick_code(rng)
                            : parent[r] % static_cast<std::uint32_t>(card);
    }
    raw.push_back(std::move(codes));
  }

  std::vector<std::string> names = DefaultNames(spec.features, spec.labels);
  std::vector<std::string> feature_names(names.begin(),
                                         names.begin() + spec.features);
  std::vector<std::string> label_names(names.begin() + spec.features,
                                       names.end());
  std::vector<ColumnPtr> features;
  std::vector<ColumnPtr> labels;
  for (std::size_t j = 0; j < spec.labels; ++j) {
    labels.push_back(
        std::make_shared<const DiscreteColumn>(DiscreteColumn::FromCodes(raw[j])));
  }
  for (std::size_t i = 0; i < spec.features; ++i) {
    features.push_back(std::make_shared<const DiscreteColumn>(
        DiscreteColumn::FromCodes(raw[spec.labels + i])));
  }
  return Dataset(std::move(feature_names), std::move(features),
                 std::move(label_names), std::move(labels), n);
}

}  // namespace divsel
