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

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "divsel/errors.h"
#include "testing/reference.h"

namespace divsel {
namespace {

using ::divsel::testing::MakeColumn;
using ::divsel::testing::ValuesOf;

TEST(DiscreteColumnTest, FromValuesRanksDistinctValues) {
  const std::vector<double> raw = {3.5, -1.0, 3.5, 7.0};
  DiscreteColumn col = DiscreteColumn::FromValues(raw);
  EXPECT_EQ(col.cardinality(), 3u);
  EXPECT_EQ(ValuesOf(col), (testing::Values{1, 0, 1, 2}));
}

TEST(DiscreteColumnTest, FromCodesCompactsGaps) {
  const std::vector<std::uint32_t> raw = {5, 2, 5, 9};
  DiscreteColumn col = DiscreteColumn::FromCodes(raw);
  EXPECT_EQ(col.cardinality(), 3u);
  EXPECT_EQ(ValuesOf(col), (testing::Values{1, 0, 1, 2}));
}

TEST(DiscreteColumnTest, EqualityComparesCodes) {
  EXPECT_EQ(*MakeColumn({0, 1, 1}), *MakeColumn({3, 8, 8}));
  EXPECT_FALSE(*MakeColumn({0, 1, 1}) == *MakeColumn({1, 0, 0}));
}

TEST(DatasetTest, RejectsMismatchedLengths) {
  EXPECT_THROW(testing::MakeDataset({{0, 1, 0}}, {{0, 1}}), ValidationError);
}

TEST(DatasetTest, RejectsNonBinaryLabelsUnlessPermissive) {
  EXPECT_THROW(testing::MakeDataset({{0, 1, 0}}, {{0, 1, 2}}),
               ValidationError);
  Dataset ok({"a"}, {MakeColumn({0, 1, 0})}, {"y"}, {MakeColumn({0, 1, 2})},
             3, DatasetOptions{.permissive_labels = true});
  EXPECT_EQ(ok.label(0).cardinality(), 3u);
}

TEST(DatasetTest, RejectsDuplicateNames) {
  EXPECT_THROW(Dataset({"a", "a"}, {MakeColumn({0, 1}), MakeColumn({1, 0})},
                       {"y"}, {MakeColumn({0, 1})}, 2),
               ValidationError);
}

TEST(DatasetTest, AllFeatureIdsAscending) {
  Dataset data = testing::MakeDataset({{0, 1}, {1, 1}, {0, 0}}, {{0, 1}});
  EXPECT_EQ(data.AllFeatureIds(), (std::vector<FeatureId>{0, 1, 2}));
}

TEST(DiscretizeTest, EqualFrequencyFillsBinsEvenly) {
  std::vector<double> values(100);
  for (int i = 0; i < 100; ++i) values[i] = 99 - i;
  DiscreteColumn col = Discretize(values, BinningSpec{});
  ASSERT_EQ(col.cardinality(), 5u);
  std::vector<int> counts(5);
  for (Code c : col.codes()) ++counts[c];
  EXPECT_EQ(counts, (std::vector<int>{20, 20, 20, 20, 20}));
  // Bin order follows value order.
  EXPECT_EQ(col[0], 4);
  EXPECT_EQ(col[99], 0);
}

TEST(DiscretizeTest, EqualWidth) {
  std::vector<double> values = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  BinningSpec spec{.strategy = BinningSpec::Strategy::kEqualWidth,
                   .bins = 2,
                   .max_raw_categories = 0};
  DiscreteColumn col = Discretize(values, spec);
  EXPECT_EQ(ValuesOf(col), (testing::Values{0, 0, 0, 0, 0, 1, 1, 1, 1, 1}));
}

TEST(DiscretizeTest, FewDistinctValuesStayRaw) {
  std::vector<double> values = {0.5, 0.25, 0.5, 0.125};
  DiscreteColumn col = Discretize(values, BinningSpec{.bins = 2});
  EXPECT_EQ(col.cardinality(), 3u);
}

TEST(DiscretizeTest, RejectsTooFewBins) {
  std::vector<double> values = {1, 2};
  EXPECT_THROW(Discretize(values, BinningSpec{.bins = 1}), DomainError);
}

DenseCsvOptions TwoLabels() {
  return DenseCsvOptions{.label_count = 2, .has_header = true};
}

TEST(DenseCsvTest, ParsesHeaderAndLabels) {
  std::istringstream in(
      "a,b,y1,y2\n"
      "1,0.5,0,1\n"
      "\n"
      "2,0.5,1,1\n"
      "1,0.25,0,0\n");
  Dataset data = ParseDenseCsv(in, TwoLabels());
  EXPECT_EQ(data.n(), 3u);
  EXPECT_EQ(data.num_features(), 2u);
  EXPECT_EQ(data.num_labels(), 2u);
  EXPECT_EQ(data.feature_names(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(data.label_names(), (std::vector<std::string>{"y1", "y2"}));
  EXPECT_EQ(ValuesOf(data.feature(0)), (testing::Values{0, 1, 0}));
  EXPECT_EQ(ValuesOf(data.label(1)), (testing::Values{1, 1, 0}));
}

TEST(DenseCsvTest, DefaultNamesWithoutHeader) {
  std::istringstream in("1,0\n2,1\n");
  Dataset data = ParseDenseCsv(in, DenseCsvOptions{});
  EXPECT_EQ(data.feature_names(), (std::vector<std::string>{"f1"}));
  EXPECT_EQ(data.label_names(), (std::vector<std::string>{"l0"}));
}

TEST(DenseCsvTest, RaggedRowNamesLine) {
  std::istringstream in("a,b,y\n1,2,0\n1,2\n");
  try {
    ParseDenseCsv(in, DenseCsvOptions{.has_header = true}, "data.csv");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("data.csv:3"), std::string::npos)
        << e.what();
  }
}

TEST(DenseCsvTest, NonNumericCellIsParseError) {
  std::istringstream in("1,x,0\n");
  EXPECT_THROW(ParseDenseCsv(in, DenseCsvOptions{}), ParseError);
}

TEST(DenseCsvTest, MissingCellIsParseError) {
  std::istringstream in("1,,0\n");
  EXPECT_THROW(ParseDenseCsv(in, DenseCsvOptions{}), ParseError);
}

TEST(DenseCsvTest, TooManyLabelColumns) {
  std::istringstream in("1,0\n");
  EXPECT_THROW(ParseDenseCsv(in, DenseCsvOptions{.label_count = 2}),
               ValidationError);
}

TEST(DenseCsvTest, NonBinaryLabelIsValidationError) {
  std::istringstream in("1,0\n2,1\n3,2\n");
  EXPECT_THROW(ParseDenseCsv(in, DenseCsvOptions{}), ValidationError);
}

TEST(DenseCsvTest, WriteThenParseRoundTrips) {
  Dataset data = GenerateRandom(RandomDatasetSpec{.features = 6}, 3);
  std::stringstream buffer;
  WriteDenseCsv(data, buffer);
  Dataset back = ParseDenseCsv(
      buffer, DenseCsvOptions{.label_count = data.num_labels(),
                              .has_header = true,
                              .binning = {.strategy =
                                              BinningSpec::Strategy::kNone}});
  ASSERT_EQ(back.num_features(), data.num_features());
  for (FeatureId f = 0; f < data.num_features(); ++f) {
    EXPECT_EQ(back.feature(f), data.feature(f));
  }
  EXPECT_EQ(back.feature_names(), data.feature_names());
}

TEST(DenseCsvTest, ColumnReaderMatchesFullLoad) {
  const auto path =
      std::filesystem::temp_directory_path() / "divsel_column_reader.csv";
  {
    std::ofstream out(path);
    out << "a,b,c,y\n1,2,3,0\n4,5,6,1\n";
  }
  DenseCsvLayout layout = ScanDenseCsv(path, true);
  EXPECT_EQ(layout.columns, 4u);
  EXPECT_EQ(layout.rows, 2u);
  const std::vector<std::size_t> wanted = {2, 0};
  auto cols = ReadDenseCsvColumns(path, true, wanted);
  ASSERT_EQ(cols.size(), 2u);
  EXPECT_EQ(cols[0], (std::vector<double>{3, 6}));
  EXPECT_EQ(cols[1], (std::vector<double>{1, 4}));
  std::filesystem::remove(path);
}

SparseOptions SparseShape() { return SparseOptions{.n_features = 3, .n_labels = 2}; }

TEST(SparseTest, ParsesLabelsAndFeatures) {
  std::istringstream in(
      "0,1 1:1 3:2\n"
      "1 2:1\n"
      "\n"
      "0 1:1\n");
  Dataset data = ParseSparseMultilabel(in, SparseShape());
  EXPECT_EQ(data.n(), 4u);
  EXPECT_EQ(ValuesOf(data.feature(0)), (testing::Values{1, 0, 0, 1}));
  EXPECT_EQ(ValuesOf(data.feature(2)), (testing::Values{1, 0, 0, 0}));
  EXPECT_EQ(ValuesOf(data.label(0)), (testing::Values{1, 0, 0, 1}));
  EXPECT_EQ(ValuesOf(data.label(1)), (testing::Values{1, 1, 0, 0}));
}

TEST(SparseTest, Errors) {
  const char* bad[] = {"2 1:1\n", "0 4:1\n", "0 2:1 1:1\n", "0 x:1\n",
                       "0 1\n"};
  for (const char* text : bad) {
    std::istringstream in(text);
    EXPECT_THROW(ParseSparseMultilabel(in, SparseShape()), ParseError)
        << text;
  }
  std::istringstream in("0 1:1\n");
  EXPECT_THROW(ParseSparseMultilabel(in, SparseOptions{}), DomainError);
}

TEST(SynthesizedTest, Shape) {
  Dataset data = GenerateSynthesized(7);
  EXPECT_EQ(data.num_features(), 800u);
  EXPECT_EQ(data.n(), 256u);
  EXPECT_EQ(data.num_labels(), 8u);
  EXPECT_EQ(data.feature_names()[0], "l0_half_0");
  EXPECT_EQ(data.feature_names()[50], "l0_quarter_0");
  EXPECT_EQ(data.feature_names()[799], "l7_quarter_49");
}

TEST(SynthesizedTest, AgreementWithLabels) {
  Dataset data = GenerateSynthesized(11);
  for (std::size_t l = 0; l < kSynthLabels; ++l) {
    const auto label = ValuesOf(data.label(l));
    auto agreement = [&](FeatureId f) {
      const auto x = ValuesOf(data.feature(f));
      int same = 0;
      for (std::size_t i = 0; i < x.size(); ++i) same += x[i] == label[i];
      return same;
    };
    const auto base = static_cast<FeatureId>(100 * l);
    // Codes are canonicalized, so a copy may appear complemented.
    const int half = agreement(base);
    EXPECT_TRUE(half == 128) << half;
    const int quarter = agreement(base + 50);
    EXPECT_TRUE(quarter == 64 || quarter == 192) << quarter;
    for (FeatureId r = 1; r < kSynthRepeats; ++r) {
      EXPECT_EQ(data.feature(base + r), data.feature(base));
      EXPECT_EQ(data.feature(base + 50 + r), data.feature(base + 50));
    }
  }
}

TEST(SynthesizedTest, SeedDetermines) {
  Dataset a = GenerateSynthesized(5);
  Dataset b = GenerateSynthesized(5);
  Dataset c = GenerateSynthesized(6);
  EXPECT_EQ(a.feature(0), b.feature(0));
  EXPECT_EQ(a.label(3), b.label(3));
  EXPECT_FALSE(a.label(0) == c.label(0));
}

TEST(RandomDatasetTest, RespectsSpec) {
  Dataset data = GenerateRandom(
      RandomDatasetSpec{.features = 9, .instances = 40, .labels = 3,
                        .max_cardinality = 4},
      1);
  EXPECT_EQ(data.num_features(), 9u);
  EXPECT_EQ(data.n(), 40u);
  for (FeatureId f = 0; f < 9; ++f) {
    EXPECT_LE(data.feature(f).cardinality(), 4u);
  }
}

}  // namespace
}  // namespace divsel
