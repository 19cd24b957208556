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

// Straightforward reimplementations used as independent oracles in tests.
// Nothing here shares code with the library beyond the data containers.

#ifndef DIVSEL_TESTS_TESTING_REFERENCE_H_
#define DIVSEL_TESTS_TESTING_REFERENCE_H_

#include <cstdint>
#include <random>
#include <vector>

#include "divsel/data_model.h"

namespace divsel::testing {

using Values = std::vector<std::uint32_t>;

ColumnPtr MakeColumn(const Values& values);
Dataset MakeDataset(const std::vector<Values>& features,
                    const std::vector<Values>& labels);

// Uniform random column with `cardinality` possible values.
Values RandomValues(std::mt19937_64& rng, std::size_t n,
                    std::uint32_t cardinality);

// Entropies in bits from a map of observed symbols.
double NaiveEntropy(const Values& a);
double NaiveJointEntropy(const Values& a, const Values& b);
// Sum over cells of p(x,y) log p(x,y) / (p(x) p(y)).
double NaiveMutualInformation(const Values& a, const Values& b);
double NaiveNvi(const Values& a, const Values& b);
double NaiveNormalizedMi(const Values& a, const Values& b);

Values ValuesOf(const DiscreteColumn& column);

// mi[f][l] for every feature and label of `data`.
std::vector<std::vector<double>> NaiveMiMatrix(const Dataset& data);

struct NaiveObjective {
  double diversity = 0.0;
  double relevance = 0.0;
  double h = 0.0;
};

// Objective from first principles: pairwise NVI sum plus, per label, the
// p largest MI values, combined with the lambda trade-off and the
// C(k,2) / (p |L|) normalization (C(1,2) taken as 1).
NaiveObjective NaiveEvaluate(const Dataset& data,
                             const std::vector<std::vector<double>>& mi,
                             const std::vector<FeatureId>& s, double lambda,
                             int p, int k);

// Quadratic greedy that recomputes every score from scratch.
// `relevance_weight` is 1 for Greedy and 0.5 for AltGreedy.
std::vector<FeatureId> ReferenceGreedy(
    const Dataset& data, const std::vector<std::vector<double>>& mi,
    const std::vector<FeatureId>& candidates, int k, double lambda, int p,
    double relevance_weight);

struct ReferenceOpt {
  std::vector<FeatureId> best;
  double value = 0.0;
};

// Exhaustive search over k-subsets of `candidates` via bitmask enumeration.
ReferenceOpt ReferenceOptimum(const Dataset& data,
                              const std::vector<std::vector<double>>& mi,
                              const std::vector<FeatureId>& candidates, int k,
                              double lambda, int p);

}  // namespace divsel::testing

#endif  // DIVSEL_TESTS_TESTING_REFERENCE_H_
