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

#include "cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "divsel/coreset_runner.h"
#include "divsel/data_model.h"
#include "divsel/errors.h"
#include "divsel/metrics.h"
#include "divsel/oracle.h"
#include "divsel/partition_stream.h"
#include "divsel/report_json.h"

namespace divsel::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::string input;
  std::string format = "dense-csv";
  std::optional<std::size_t> labels;
  std::optional<std::size_t> n_features;
  std::optional<std::size_t> n_labels;
  int bins = 5;
  std::string binning = "equal-frequency";
  std::size_t max_raw_categories = 32;
  bool header = false;
  bool permissive_labels = false;
};

struct SelectionFlags {
  std::string mode = "centralized";
  std::optional<std::string> algorithm;
  int k = 10;
  double lambda = 0.5;
  int p = 10;
  std::optional<int> machines;
  std::uint64_t seed = 0;
  std::optional<int> parallelism;
};

void AddInputFlags(CLI::App* cmd, InputFlags& f) {
  cmd->add_option("--input", f.input, "Dataset path, '-' or omitted for stdin");
  cmd->add_option("--format", f.format, "dense-csv or sparse-ml")
      ->check(CLI::IsMember({"dense-csv", "sparse-ml"}));
  cmd->add_option("--labels", f.labels,
                  "Number of trailing label columns (dense-csv)");
  cmd->add_option("--n-features", f.n_features, "Feature count (sparse-ml)");
  cmd->add_option("--n-labels", f.n_labels, "Label count (sparse-ml)");
  cmd->add_option("--bins", f.bins, "Bins for continuous columns")
      ->check(CLI::Range(2, 65536));
  cmd->add_option("--binning", f.binning,
                  "equal-frequency, equal-width or none")
      ->check(CLI::IsMember({"equal-frequency", "equal-width", "none"}));
  cmd->add_option("--max-raw-categories", f.max_raw_categories,
                  "Columns with at most this many values are not binned");
  cmd->add_flag("--header", f.header, "First row holds column names");
  cmd->add_flag("--permissive-labels", f.permissive_labels,
                "Allow non-binary label columns");
}

// An empty --input means stdin when `stdin_default` is set.
void ValidateInput(InputFlags& f, bool stdin_default) {
  if (stdin_default && f.input.empty()) f.input = "-";
  if (f.format == "dense-csv") {
    if (f.n_features || f.n_labels) {
      throw UsageError(
          "--n-features/--n-labels only apply to --format sparse-ml");
    }
    if (!f.input.empty() && !f.labels) {
      throw UsageError("--labels is required for --format dense-csv");
    }
    if (f.labels && *f.labels == 0) {
      throw UsageError("--labels must be positive");
    }
  } else {
    if (f.labels) throw UsageError("--labels only applies to --format dense-csv");
    if (f.header) throw UsageError("--header only applies to --format dense-csv");
    if (!f.n_features || !f.n_labels || *f.n_features == 0 ||
        *f.n_labels == 0) {
      throw UsageError(
          "--format sparse-ml needs positive --n-features and --n-labels");
    }
    if (f.input == "-") {
      throw UsageError("--format sparse-ml cannot read from stdin");
    }
  }
}

BinningSpec ToBinning(const InputFlags& f) {
  BinningSpec spec;
  spec.bins = f.bins;
  spec.max_raw_categories = f.max_raw_categories;
  if (f.binning == "equal-width") {
    spec.strategy = BinningSpec::Strategy::kEqualWidth;
  } else if (f.binning == "none") {
    spec.strategy = BinningSpec::Strategy::kNone;
  }
  return spec;
}

DenseCsvOptions ToDenseOptions(const InputFlags& f) {
  return DenseCsvOptions{.label_count = f.labels.value_or(1),
                         .has_header = f.header,
                         .binning = ToBinning(f),
                         .permissive_labels = f.permissive_labels};
}

Dataset LoadInput(const InputFlags& f, std::istream& in) {
  if (f.format == "sparse-ml") {
    return LoadSparseMultilabel(
        f.input, SparseOptions{.n_features = *f.n_features,
                               .n_labels = *f.n_labels,
                               .binning = ToBinning(f)});
  }
  if (f.input == "-") return ParseDenseCsv(in, ToDenseOptions(f), "<stdin>");
  return LoadDenseCsv(f.input, ToDenseOptions(f));
}

std::optional<int> EchoBins(const InputFlags& f) {
  if (f.binning == "none") return std::nullopt;
  return f.bins;
}

void AddSelectionFlags(CLI::App* cmd, SelectionFlags& f, bool single_k) {
  if (single_k) {
    cmd->add_option("--k", f.k, "Number of features to select")
        ->check(CLI::PositiveNumber);
  }
  cmd->add_option("--lambda", f.lambda, "Diversity weight in [0, 1]")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--p", f.p, "Depth of the per-label top-p relevance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--machines", f.machines,
                  "Partitions (default ceil(sqrt(d/k)))")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Seed for all randomized behavior");
  cmd->add_option("--parallelism", f.parallelism,
                  "Worker threads (default: available cores)")
      ->check(CLI::PositiveNumber);
}

int DefaultParallelism() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void Emit(const std::string& text, const std::string& output,
          std::ostream& out) {
  if (output.empty() || output == "-") {
    out << text;
    out.flush();
    return;
  }
  std::ofstream file(output);
  if (!file) throw ParseError(output, 0, "cannot open output file");
  file << text;
  if (!file) throw ParseError(output, 0, "write failed");
}

void EmitJson(const Json& doc, const std::string& output, std::ostream& out) {
  Emit(doc.dump(2) + "\n", output, out);
}

RunReport RunSelection(const SelectionFlags& sel, const InputFlags& input,
                       std::istream& in) {
  const SelectionParams params{.k = sel.k, .lambda = sel.lambda, .p = sel.p};
  const DistributedOptions options{
      .machines = sel.machines.value_or(0),
      .seed = sel.seed,
      .parallelism = sel.parallelism.value_or(DefaultParallelism())};
  RunReport report;
  if (sel.mode == "streaming" && input.format == "dense-csv" &&
      input.input != "-") {
    DenseCsvPartitionStream stream(input.input, ToDenseOptions(input));
    report = StreamingSelect(stream, params, options);
  } else {
    Dataset data = LoadInput(input, in);
    if (sel.mode == "centralized") {
      const GreedyVariant variant = sel.algorithm.value_or("altgreedy") == "greedy"
                                        ? GreedyVariant::kGreedy
                                        : GreedyVariant::kAltGreedy;
      report = CentralizedSelect(data, params, variant);
      report.seed = sel.seed;
    } else if (sel.mode == "distributed") {
      report = DistributedSelect(data, params, options);
    } else {
      DatasetPartitionStream stream(data);
      report = StreamingSelect(stream, params, options);
    }
  }
  report.bins = EchoBins(input);
  return report;
}

struct BenchFlags {
  std::vector<int> ks{10, 50};
  std::vector<std::string> modes{"centralized", "distributed"};
};

Json RunBench(const BenchFlags& bench, const SelectionFlags& sel,
              const InputFlags& input, std::istream& in) {
  Dataset data = input.input.empty() ? GenerateSynthesized(sel.seed)
                                     : LoadInput(input, in);
  const int parallelism = sel.parallelism.value_or(DefaultParallelism());
  Json doc;
  Json dataset;
  dataset["source"] = input.input.empty() ? "synthesized" : input.input;
  dataset["features"] = data.num_features();
  dataset["instances"] = data.n();
  dataset["labels"] = data.num_labels();
  doc["dataset"] = std::move(dataset);
  doc["lambda"] = sel.lambda;
  doc["p"] = sel.p;
  doc["seed"] = sel.seed;
  doc["parallelism"] = parallelism;

  Json rows = Json::array();
  for (int k : bench.ks) {
    const SelectionParams params{.k = k, .lambda = sel.lambda, .p = sel.p};
    const int machines =
        sel.machines.value_or(DefaultMachineCount(data.num_features(), k));
    const DistributedOptions options{
        .machines = machines, .seed = sel.seed, .parallelism = parallelism};
    Json row;
    row["k"] = k;
    row["machines"] = machines;
    Json results;
    for (const std::string& mode : bench.modes) {
      RunReport report;
      if (mode == "centralized") {
        report = CentralizedSelect(data, params, GreedyVariant::kAltGreedy);
      } else if (mode == "distributed") {
        report = DistributedSelect(data, params, options);
      } else {
        DatasetPartitionStream stream(data);
        report = StreamingSelect(stream, params, options);
      }
      Json cell;
      cell["objective"] = report.objective.h;
      cell["runtime_ms"] = report.timings.total_ms;
      results[mode] = std::move(cell);
    }
    row["results"] = std::move(results);
    if (row["results"].contains("centralized") &&
        row["results"].contains("distributed")) {
      const double central = row["results"]["centralized"]["objective"];
      const double dist = row["results"]["distributed"]["objective"];
      const double central_ms = row["results"]["centralized"]["runtime_ms"];
      const double dist_ms = row["results"]["distributed"]["runtime_ms"];
      row["objective_ratio"] = central > 0.0 ? dist / central : 1.0;
      row["speedup"] = dist_ms > 0.0 ? central_ms / dist_ms : 0.0;
    }
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Diverse, label-relevant feature selection for multi-label data",
               "divsel"};
  app.require_subcommand(1);

  InputFlags input;
  SelectionFlags sel;
  std::string output;

  CLI::App* select_cmd =
      app.add_subcommand("select", "Select k features and print a run report");
  AddInputFlags(select_cmd, input);
  AddSelectionFlags(select_cmd, sel, /*single_k=*/true);
  select_cmd->add_option("--mode", sel.mode,
                         "centralized, distributed or streaming")
      ->check(CLI::IsMember({"centralized", "distributed", "streaming"}));
  select_cmd->add_option("--algorithm", sel.algorithm,
                         "greedy or altgreedy (centralized only)")
      ->check(CLI::IsMember({"greedy", "altgreedy"}));
  select_cmd->add_option("--output", output, "Write the report here");

  std::vector<std::uint64_t> seeds;
  std::optional<unsigned long long> budget;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Compare the algorithms with the exhaustive optimum");
  AddInputFlags(oracle_cmd, input);
  AddSelectionFlags(oracle_cmd, sel, /*single_k=*/true);
  oracle_cmd->add_option("--seeds", seeds, "Seeds of the distributed runs")
      ->delimiter(',');
  oracle_cmd->add_option("--budget", budget,
                         "Maximum number of subsets to enumerate");
  oracle_cmd->add_option("--output", output, "Write the report here");

  std::string truth_path;
  std::string predicted_path;
  CLI::App* metrics_cmd = app.add_subcommand(
      "eval-metrics", "Multi-label measures of predictions against truth");
  metrics_cmd->add_option("--truth", truth_path, "0/1 CSV of true labels")
      ->required();
  metrics_cmd->add_option("--predicted", predicted_path,
                          "0/1 CSV of predicted labels")
      ->required();
  metrics_cmd->add_option("--output", output, "Write the scores here");

  std::uint64_t synth_seed = 0;
  CLI::App* synth_cmd = app.add_subcommand(
      "gen-synth", "Write the synthesized 800-feature dataset as dense CSV");
  synth_cmd->add_option("--seed", synth_seed, "Generator seed");
  synth_cmd->add_option("--output", output, "Write the CSV here");

  BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Objective and runtime of centralized vs distributed runs");
  AddInputFlags(bench_cmd, input);
  AddSelectionFlags(bench_cmd, sel, /*single_k=*/false);
  bench_cmd->add_option("--k", bench.ks, "Comma separated k values")
      ->delimiter(',');
  bench_cmd->add_option("--modes", bench.modes, "Comma separated modes")
      ->delimiter(',')
      ->check(CLI::IsMember({"centralized", "distributed", "streaming"}));
  bench_cmd->add_option("--output", output, "Write the table here");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("divsel");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (select_cmd->parsed()) {
      ValidateInput(input, /*stdin_default=*/true);
      if (sel.algorithm && sel.mode != "centralized") {
        throw UsageError("--algorithm only applies to --mode centralized");
      }
      if (sel.machines && sel.mode == "centralized") {
        throw UsageError("--machines does not apply to --mode centralized");
      }
      EmitJson(ToJson(RunSelection(sel, input, in)), output, out);
    } else if (oracle_cmd->parsed()) {
      ValidateInput(input, /*stdin_default=*/true);
      if (seeds.empty()) seeds = {sel.seed};
      Dataset data = LoadInput(input, in);
      const OracleOptions options{
          .budget = budget.value_or(kDefaultEnumerationBudget),
          .parallelism = sel.parallelism.value_or(DefaultParallelism())};
      ApproximationReport report = MakeApproximationReport(
          data, SelectionParams{.k = sel.k, .lambda = sel.lambda, .p = sel.p},
          sel.machines.value_or(0), seeds, options);
      EmitJson(ToJson(report), output, out);
    } else if (metrics_cmd->parsed()) {
      PredictionMatrix truth = LoadPredictionMatrix(truth_path);
      PredictionMatrix predicted = LoadPredictionMatrix(predicted_path);
      EmitJson(ToJson(MultilabelMetrics(truth, predicted)), output, out);
    } else if (synth_cmd->parsed()) {
      std::ostringstream csv;
      WriteDenseCsv(GenerateSynthesized(synth_seed), csv, /*header=*/true);
      Emit(csv.str(), output, out);
    } else if (bench_cmd->parsed()) {
      ValidateInput(input, /*stdin_default=*/false);
      for (int k : bench.ks) {
        if (k < 1) throw UsageError("--k values must be positive");
      }
      EmitJson(RunBench(bench, sel, input, in), output, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceededError& e) {
    err << "refused: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    err << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace divsel::cli
