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

#include "divsel/report_json.h"

#include <cmath>
#include <vector>

namespace divsel {
namespace {

// JSON has no infinity; unbounded ratios serialize as null.
Json Number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

}  // namespace

Json ToJson(const ObjectiveValue& value) {
  Json j;
  j["h"] = value.h;
  j["diversity_term"] = value.diversity_term;
  j["relevance_term"] = value.relevance_term;
  j["diversity"] = value.diversity;
  j["relevance"] = value.relevance;
  return j;
}

Json ToJson(const RunReport& report) {
  Json j;
  j["mode"] = RunModeName(report.mode);
  j["algorithm"] = VariantName(report.algorithm);

  Json config;
  config["k"] = report.params.k;
  config["lambda"] = report.params.lambda;
  config["p"] = report.params.p;
  config["bins"] = report.bins ? Json(*report.bins) : Json(nullptr);
  config["seed"] = report.seed;
  config["machines"] =
      report.plan ? Json(report.plan->machines) : Json(nullptr);
  config["parallelism"] = report.parallelism;
  j["config"] = std::move(config);

  Json selected = Json::array();
  for (std::size_t i = 0; i < report.selected.size(); ++i) {
    Json item;
    item["id"] = report.selected[i];
    item["name"] = i < report.selected_names.size()
                       ? Json(report.selected_names[i])
                       : Json(nullptr);
    selected.push_back(std::move(item));
  }
  j["selected"] = std::move(selected);
  j["objective"] = ToJson(report.objective);

  Json timings;
  timings["partition"] = report.timings.partition_ms;
  timings["map"] = report.timings.map_ms;
  timings["reduce"] = report.timings.reduce_ms;
  timings["total"] = report.timings.total_ms;
  j["timings_ms"] = std::move(timings);

  if (report.plan) {
    Json plan;
    plan["machines"] = report.plan->machines;
    plan["seed"] = report.plan->seed;
    std::vector<std::size_t> sizes;
    for (const auto& part : report.plan->Parts()) sizes.push_back(part.size());
    plan["part_sizes"] = sizes;
    plan["assignment"] = report.plan->assignment;
    j["plan"] = std::move(plan);
  } else {
    j["plan"] = nullptr;
  }
  j["coresets"] = report.coresets;
  j["peak_retained_columns"] = report.peak_retained_columns
                                   ? Json(*report.peak_retained_columns)
                                   : Json(nullptr);
  return j;
}

Json ToJson(const ApproximationReport& report) {
  Json j;
  j["features"] = report.features;
  j["k"] = report.params.k;
  j["lambda"] = report.params.lambda;
  j["p"] = report.params.p;
  j["machines"] = report.machines;
  j["optimum"] = report.optimum;
  j["optimum_value"] = report.optimum_value;
  j["greedy_value"] = report.greedy_value;
  j["greedy_ratio"] = report.greedy_ratio;
  j["altgreedy_value"] = report.altgreedy_value;
  j["altgreedy_ratio"] = report.altgreedy_ratio;
  Json runs = Json::array();
  for (std::size_t i = 0; i < report.seeds.size(); ++i) {
    Json run;
    run["seed"] = report.seeds[i];
    run["value"] = report.distributed_values[i];
    run["ratio"] = report.distributed_ratios[i];
    runs.push_back(std::move(run));
  }
  j["distributed"] = std::move(runs);
  j["mean_distributed_ratio"] = report.mean_distributed_ratio;
  j["min_distributed_ratio"] = report.min_distributed_ratio;
  j["altgreedy_bound"] = kAltGreedyBound;
  j["distributed_bound"] = kDistributedBound;
  j["altgreedy_bound_holds"] = report.altgreedy_bound_holds;
  j["distributed_bound_holds"] = report.distributed_bound_holds;
  return j;
}

Json ToJson(const MultilabelScores& scores) {
  Json j;
  j["subset_accuracy"] = scores.subset_accuracy;
  j["example_accuracy"] = scores.example_accuracy;
  j["example_f"] = scores.example_f;
  j["label_avg_f"] = scores.label_avg_f;
  j["pooled_f"] = scores.pooled_f;
  return j;
}

Json ToJson(const NicenessReport& report) {
  Json j;
  j["selected"] = report.selected;
  j["objective"] = report.objective;
  j["rejected"] = report.rejected;
  j["max_gain_ratio"] = Number(report.max_gain_ratio);
  j["worst_gain_element"] = report.worst_gain_element;
  j["max_distance_ratio"] = Number(report.max_distance_ratio);
  j["worst_distance_element"] = report.worst_distance_element;
  j["removal_stable"] = report.removal_stable;
  j["unstable_elements"] = report.unstable_elements;
  return j;
}

}  // namespace divsel
