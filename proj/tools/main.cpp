// Copyright 2026 The tweetemo Authors.
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

#include <iostream>
#include <map>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "commands.hpp"
#include "tweetemo/error.hpp"

namespace {

using namespace tweetemo;
using namespace tweetemo::cli;

const std::map<std::string, ReportFormat> kFormats = {
    {"text", ReportFormat::text}, {"json", ReportFormat::json}, {"csv", ReportFormat::csv}};
const std::map<std::string, ModelKind> kModels = {
    {"svm", ModelKind::svm}, {"mnb", ModelKind::mnb}, {"gnb", ModelKind::gnb}};

std::optional<double> parse_gamma(const std::string& s) {
  if (s == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("--gamma must be a positive number or 'auto', got '" + s + "'");
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("tweetemo"));
  spdlog::set_pattern("[%l] %v");

  CLI::App app{"Tweet emotion classification: data prep, SVM / naive Bayes training, evaluation, log-prob fusion."};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file; explicit flags take precedence");

  GlobalOptions global;
  bool verbose = false, quiet = false;
  app.add_option("--seed", global.seed, "Random seed for splitting and Platt folds")->capture_default_str();
  app.add_option("--threads", global.threads, "Worker threads for one-vs-rest training")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1024}))
      ->capture_default_str();
  std::string format = "text";
  app.add_option("--format", format, "Output format: text, json or csv")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
  app.add_flag("-v,--verbose", verbose, "Debug logging");
  app.add_flag("-q,--quiet", quiet, "Warnings and errors only");

  PrepareOptions prep;
  auto* prepare = app.add_subcommand("prepare", "Build balanced train/validation/test splits");
  prepare->add_option("--wassa", prep.wassa_dir, "Directory of WASSA-2017 TSV files")->required();
  prepare->add_option("--neutral", prep.neutral_csv, "CSV with neutral tweets");
  prepare->add_option("--out", prep.out_dir, "Output directory")->required();
  prepare->add_option("--per-class", prep.per_class, "Tweets sampled per class")->capture_default_str()
      ->check(CLI::PositiveNumber);
  prepare->add_flag("--drop-neutral", prep.drop_neutral, "Four-class corpus without neutral tweets");
  prepare->add_option("--text-column", prep.neutral.text_column)->capture_default_str();
  prepare->add_option("--label-column", prep.neutral.label_column)->capture_default_str();
  prepare->add_option("--neutral-tag", prep.neutral.neutral_tag)->capture_default_str();
  prepare->add_option("--id-column", prep.neutral.id_column, "Empty or absent: synthesized ids")
      ->capture_default_str();

  TrainCommand train_cmd;
  std::string gamma = "auto";
  auto* train = app.add_subcommand("train", "Fit a classifier on <data>/train.jsonl");
  std::string model = "svm";
  train->add_option("--model", model, "svm, mnb or gnb")->check(CLI::IsMember(kModels))->capture_default_str();
  train->add_option("--data", train_cmd.data_dir, "Directory written by prepare")->required();
  train->add_option("--out", train_cmd.out_path, "Model file")->required();
  train->add_option("--c", train_cmd.options.svm.C, "SVM box constraint")->capture_default_str();
  train->add_option("--gamma", gamma, "RBF width, or 'auto'")->capture_default_str();
  train->add_option("--tol", train_cmd.options.svm.tol, "SMO KKT tolerance")->capture_default_str();
  train->add_option("--max-passes", train_cmd.options.svm.max_passes, "SMO iteration budget, in passes over the data")
      ->capture_default_str();
  train->add_option("--cache-mb", train_cmd.options.svm.cache_mb, "Kernel cache size")->capture_default_str();
  train->add_option("--platt-folds", train_cmd.options.svm.platt_folds, "Cross-validation folds for Platt scaling")
      ->capture_default_str();
  train->add_option("--alpha", train_cmd.options.alpha, "Multinomial NB additive smoothing")->capture_default_str();
  train->add_option("--smoothing", train_cmd.options.smoothing, "Gaussian NB variance smoothing")
      ->capture_default_str();

  EvaluateOptions eval_opts;
  auto* evaluate = app.add_subcommand("evaluate", "Score a model on a split");
  evaluate->add_option("--model", eval_opts.model_path)->required();
  evaluate->add_option("--data", eval_opts.data_dir)->required();
  evaluate->add_option("--split", eval_opts.split)->check(CLI::IsMember({"validation", "test", "train"}))
      ->capture_default_str();
  evaluate->add_option("--out", eval_opts.out_path, "Report file (default stdout)");
  evaluate->add_option("--predictions", eval_opts.predictions_path, "Per-tweet predictions as JSONL");

  ExportOptions export_opts;
  auto* export_cmd = app.add_subcommand("export-logprobs", "Write per-tweet log-probabilities as JSONL");
  export_cmd->add_option("--model", export_opts.model_path)->required();
  export_cmd->add_option("--data", export_opts.data_dir)->required();
  export_cmd->add_option("--split", export_opts.split)->check(CLI::IsMember({"validation", "test", "train"}))
      ->capture_default_str();
  export_cmd->add_option("--out", export_opts.out_path, "Stream file (default stdout)");
  export_cmd->add_option("--source", export_opts.source, "Source tag (default: model kind)");

  EnsembleOptions ens_opts;
  auto* ensemble = app.add_subcommand("ensemble", "Sum log-probability streams and score the fused predictions");
  ensemble->add_option("inputs", ens_opts.inputs, "Log-prob JSONL streams")->required();
  ensemble->add_option("--out", ens_opts.out_path, "Report file (default stdout)");
  ensemble->add_option("--predictions", ens_opts.predictions_path, "Per-tweet fused predictions as JSONL");

  std::vector<std::filesystem::path> validate_inputs;
  auto* validate = app.add_subcommand("validate", "Check log-prob streams against the wire contract");
  validate->add_option("inputs", validate_inputs)->required();

  PredictOptions pred_opts;
  auto* predict = app.add_subcommand("predict", "Classify one tweet");
  predict->add_option("--model", pred_opts.model_path)->required();
  predict->add_option("text", pred_opts.text, "Tweet text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  spdlog::set_level(verbose ? spdlog::level::debug : quiet ? spdlog::level::warn : spdlog::level::info);

  try {
    global.format = kFormats.at(format);
    train_cmd.options.kind = kModels.at(model);
    train_cmd.options.svm.gamma = parse_gamma(gamma);
    if (*prepare) return cmd_prepare(global, prep, std::cout);
    if (*train) return cmd_train(global, train_cmd, std::cout);
    if (*evaluate) return cmd_evaluate(global, eval_opts, std::cout);
    if (*export_cmd) return cmd_export_logprobs(global, export_opts, std::cout);
    if (*ensemble) return cmd_ensemble(global, ens_opts, std::cout);
    if (*validate) return cmd_validate(validate_inputs, std::cout);
    if (*predict) return cmd_predict(global, pred_opts, std::cout);
  } catch (const UsageError& e) {
    spdlog::error("{}", e.what());
    return 2;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 2;
}
