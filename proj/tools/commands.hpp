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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tweetemo/classifier.hpp"
#include "tweetemo/corpus.hpp"
#include "tweetemo/error.hpp"
#include "tweetemo/eval.hpp"

namespace tweetemo::cli {

// Bad flag values that CLI11 cannot check by itself. Exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct GlobalOptions {
  std::uint64_t seed = 42;
  std::size_t threads = 1;
  ReportFormat format = ReportFormat::text;
};

struct PrepareOptions {
  std::filesystem::path wassa_dir;
  std::filesystem::path neutral_csv;
  std::filesystem::path out_dir;
  std::size_t per_class = 1500;
  bool drop_neutral = false;
  NeutralCsvOptions neutral;
};

struct TrainCommand {
  std::filesystem::path data_dir;
  std::filesystem::path out_path;
  TrainOptions options;
};

struct EvaluateOptions {
  std::filesystem::path model_path;
  std::filesystem::path data_dir;
  std::string split = "test";
  std::filesystem::path out_path;          // empty: stdout
  std::filesystem::path predictions_path;  // optional per-tweet JSONL
};

struct ExportOptions {
  std::filesystem::path model_path;
  std::filesystem::path data_dir;
  std::string split = "test";
  std::filesystem::path out_path;
  std::string source;  // defaults to the model kind
};

struct EnsembleOptions {
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path out_path;
  std::filesystem::path predictions_path;
};

struct PredictOptions {
  std::filesystem::path model_path;
  std::string text;
};

// Each returns the process exit code; output goes to `out`, logs to stderr.
int cmd_prepare(const GlobalOptions& g, const PrepareOptions& o, std::ostream& out);
int cmd_train(const GlobalOptions& g, const TrainCommand& o, std::ostream& out);
int cmd_evaluate(const GlobalOptions& g, const EvaluateOptions& o, std::ostream& out);
int cmd_export_logprobs(const GlobalOptions& g, const ExportOptions& o, std::ostream& out);
int cmd_ensemble(const GlobalOptions& g, const EnsembleOptions& o, std::ostream& out);
int cmd_predict(const GlobalOptions& g, const PredictOptions& o, std::ostream& out);
int cmd_validate(const std::vector<std::filesystem::path>& inputs, std::ostream& out);

// <data_dir>/<split>.jsonl for split in {train, validation, test}.
std::filesystem::path split_path(const std::filesystem::path& data_dir, const std::string& split);

}  // namespace tweetemo::cli
