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

#include "commands.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>

#include <spdlog/spdlog.h>

#include "json.hpp"
#include "tweetemo/checksum.hpp"
#include "tweetemo/ensemble.hpp"
#include "tweetemo/error.hpp"

namespace tweetemo::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::array<const char*, 3> kSplits = {"train", "validation", "test"};

void require_directory(const fs::path& dir, std::string_view what) {
  if (!fs::is_directory(dir)) throw DataError(std::string(what) + " directory not found: " + dir.string());
}

void emit(const std::string& text, const fs::path& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    spdlog::info("wrote {}", out_path.string());
  }
}

json count_by_class(const std::vector<LabeledTweet>& tweets, const std::vector<Emotion>& classes) {
  std::map<Emotion, std::size_t> counts;
  for (auto e : classes) counts[e] = 0;
  for (const auto& t : tweets) ++counts[t.label];
  json j = json::object();
  for (auto [e, n] : counts) j[std::string(to_string(e))] = n;
  return j;
}

// Manifest checksum of the data directory, when there is one; models and
// reports carry it so numbers trace back to an exact split.
json data_provenance(const fs::path& data_dir, const std::string& split) {
  json j = {{"split", split}, {"split_sha256", sha256_file(split_path(data_dir, split))}};
  if (const auto manifest = data_dir / "manifest.json"; fs::exists(manifest)) {
    j["manifest_sha256"] = sha256_file(manifest);
  }
  return j;
}

json svm_config_json(const SvmConfig& c) {
  json j = {{"C", c.C}, {"tol", c.tol}, {"max_passes", c.max_passes}, {"cache_mb", c.cache_mb},
            {"platt_folds", c.platt_folds}, {"seed", c.seed}};
  j["gamma"] = c.gamma ? json(*c.gamma) : json("auto");
  return j;
}

std::vector<LabeledTweet> load_split(const fs::path& data_dir, const std::string& split) {
  if (std::find(kSplits.begin(), kSplits.end(), split) == kSplits.end()) {
    throw UsageError("unknown split '" + split + "' (expected train, validation or test)");
  }
  const auto path = split_path(data_dir, split);
  if (!fs::exists(path)) throw DataError("split file missing: " + path.string());
  return read_jsonl(path);
}

std::vector<LogProbRecord> score_split(const TextClassifier& model, const std::vector<LabeledTweet>& tweets,
                                       const std::string& source) {
  std::vector<LogProbRecord> records;
  records.reserve(tweets.size());
  for (const auto& t : tweets) {
    records.push_back({t.id, t.label, source, model.classes(), model.predict_log_proba(t.text)});
  }
  return records;
}

std::string predictions_jsonl(const std::vector<FusedRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["gold"] = r.gold ? json(to_string(*r.gold)) : json(nullptr);
    j["predicted"] = to_string(r.predicted);
    out += j.dump() + "\n";
  }
  return out;
}

std::vector<LabelPair> gold_pairs(const std::vector<FusedRecord>& records) {
  std::vector<LabelPair> pairs;
  pairs.reserve(records.size());
  for (const auto& r : records) {
    if (!r.gold) throw DataError("record '" + r.id + "' has no gold label; cannot score");
    pairs.emplace_back(*r.gold, r.predicted);
  }
  return pairs;
}

}  // namespace

fs::path split_path(const fs::path& data_dir, const std::string& split) { return data_dir / (split + ".jsonl"); }

int cmd_prepare(const GlobalOptions& g, const PrepareOptions& o, std::ostream& out) {
  require_directory(o.wassa_dir, "WASSA input");
  auto tweets = load_wassa(o.wassa_dir);
  spdlog::info("loaded {} WASSA tweets from {}", tweets.size(), o.wassa_dir.string());

  json inputs = json::object();
  json wassa_files = json::object();
  for (const auto& entry : fs::directory_iterator(o.wassa_dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".txt" || ext == ".tsv")) {
      wassa_files[entry.path().filename().string()] = sha256_file(entry.path());
    }
  }
  inputs["wassa"] = std::move(wassa_files);

  if (!o.drop_neutral) {
    if (o.neutral_csv.empty()) throw UsageError("--neutral is required unless --drop-neutral is given");
    if (!fs::is_regular_file(o.neutral_csv)) throw DataError("neutral CSV not found: " + o.neutral_csv.string());
    auto neutral = load_neutral(o.neutral_csv, o.neutral);
    spdlog::info("loaded {} neutral tweets from {}", neutral.size(), o.neutral_csv.string());
    tweets.insert(tweets.end(), std::make_move_iterator(neutral.begin()), std::make_move_iterator(neutral.end()));
    inputs["neutral"] = {{o.neutral_csv.filename().string(), sha256_file(o.neutral_csv)}};
  }

  const auto split = balance_and_split(tweets, o.per_class, g.seed, o.drop_neutral);
  fs::create_directories(o.out_dir);

  json counts = json::object();
  json outputs = json::object();
  const std::array<const std::vector<LabeledTweet>*, 3> parts = {&split.train, &split.validation, &split.test};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto text = to_jsonl(*parts[i]);
    write_file(split_path(o.out_dir, kSplits[i]), text);
    counts[kSplits[i]] = count_by_class(*parts[i], split.classes);
    outputs[std::string(kSplits[i]) + ".jsonl"] = sha256_hex(text);
  }

  json classes = json::array();
  for (auto e : split.classes) classes.push_back(to_string(e));
  const json manifest = {
      {"format", "tweetemo-manifest"},
      {"version", 1},
      {"seed", g.seed},
      {"per_class", o.per_class},
      {"drop_neutral", o.drop_neutral},
      {"classes", std::move(classes)},
      {"counts", std::move(counts)},
      {"duplicates_dropped", split.duplicates_dropped},
      {"neutral_csv", {{"text_column", o.neutral.text_column},
                       {"label_column", o.neutral.label_column},
                       {"neutral_tag", o.neutral.neutral_tag},
                       {"id_column", o.neutral.id_column}}},
      {"inputs", std::move(inputs)},
      {"outputs", std::move(outputs)},
  };
  write_file(o.out_dir / "manifest.json", dump_canonical(manifest));
  spdlog::info("wrote {} / {} / {} tweets to {}", split.train.size(), split.validation.size(), split.test.size(),
               o.out_dir.string());
  out << dump_canonical(manifest);
  return 0;
}

int cmd_train(const GlobalOptions& g, const TrainCommand& o, std::ostream& out) {
  auto options = o.options;
  options.svm.seed = g.seed;
  options.svm.threads = g.threads;
  const auto tweets = load_split(o.data_dir, "train");
  spdlog::info("training {} on {} tweets", to_string(options.kind), tweets.size());

  auto model = TextClassifier::train(tweets, options);

  json config = {{"model", to_string(options.kind)}, {"seed", g.seed}};
  switch (options.kind) {
    case ModelKind::svm: config["svm"] = svm_config_json(options.svm); break;
    case ModelKind::mnb: config["alpha"] = options.alpha; break;
    case ModelKind::gnb: config["smoothing"] = options.smoothing; break;
  }
  model.provenance() = {{"command", "train"}, {"config", std::move(config)},
                        {"data", data_provenance(o.data_dir, "train")}};
  model.save(o.out_path);
  spdlog::info("vocabulary {} terms; model written to {}", model.vectorizer().dimension(),
               o.out_path.string());
  out << o.out_path.string() << "\n";
  return 0;
}

int cmd_evaluate(const GlobalOptions& g, const EvaluateOptions& o, std::ostream& out) {
  const auto model = TextClassifier::load(o.model_path);
  const auto tweets = load_split(o.data_dir, o.split);
  const std::vector<std::vector<LogProbRecord>> streams = {score_split(model, tweets, std::string(to_string(model.kind())))};
  const auto fused = fuse(streams);

  auto report = score(gold_pairs(fused.records), model.classes());
  report.provenance = {{"command", "evaluate"},
                       {"model_sha256", sha256_file(o.model_path)},
                       {"model", model.provenance()},
                       {"data", data_provenance(o.data_dir, o.split)}};
  if (!o.predictions_path.empty()) write_file(o.predictions_path, predictions_jsonl(fused.records));
  spdlog::info("{} accuracy {:.4f} on {} tweets", o.split, report.accuracy, report.total);
  emit(render(report, g.format), o.out_path, out);
  return 0;
}

int cmd_export_logprobs(const GlobalOptions&, const ExportOptions& o, std::ostream& out) {
  const auto model = TextClassifier::load(o.model_path);
  const auto tweets = load_split(o.data_dir, o.split);
  const auto source = o.source.empty() ? std::string(to_string(model.kind())) : o.source;
  auto records = score_split(model, tweets, source);
  for (const auto& r : records) validate_record(r);
  emit(format_stream(records), o.out_path, out);
  spdlog::info("exported {} records from source '{}'", records.size(), source);
  return 0;
}

int cmd_ensemble(const GlobalOptions& g, const EnsembleOptions& o, std::ostream& out) {
  if (o.inputs.empty()) throw UsageError("ensemble needs at least one input stream");
  std::vector<std::vector<LogProbRecord>> streams;
  json inputs = json::array();
  for (const auto& path : o.inputs) {
    streams.push_back(validate_stream(path));
    inputs.push_back({{"file", path.filename().string()}, {"sha256", sha256_file(path)},
                      {"source", streams.back().empty() ? "" : streams.back().front().source}});
  }
  const auto fused = fuse(streams);
  auto report = score(gold_pairs(fused.records), fused.classes);
  report.provenance = {{"command", "ensemble"}, {"inputs", std::move(inputs)}};
  if (!o.predictions_path.empty()) write_file(o.predictions_path, predictions_jsonl(fused.records));
  spdlog::info("fused {} streams over {} records: accuracy {:.4f}", streams.size(), report.total, report.accuracy);
  emit(render(report, g.format), o.out_path, out);
  return 0;
}

int cmd_predict(const GlobalOptions& g, const PredictOptions& o, std::ostream& out) {
  const auto model = TextClassifier::load(o.model_path);
  const auto logprobs = model.predict_log_proba(o.text);
  const auto label = model.classes()[argmax(logprobs)];
  if (g.format == ReportFormat::json) {
    nlohmann::ordered_json j;
    j["label"] = to_string(label);
    j["logprobs"] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < logprobs.size(); ++i) j["logprobs"][std::string(to_string(model.classes()[i]))] = logprobs[i];
    out << j.dump(2) << "\n";
  } else if (g.format == ReportFormat::csv) {
    out << "label,logprob\n";
    for (std::size_t i = 0; i < logprobs.size(); ++i) {
      out << to_string(model.classes()[i]) << "," << fmt::format("{:.17g}", logprobs[i]) << "\n";
    }
  } else {
    out << to_string(label) << "\n";
    for (std::size_t i = 0; i < logprobs.size(); ++i) {
      out << fmt::format("  {:<8} {:>10.4f}\n", to_string(model.classes()[i]), logprobs[i]);
    }
  }
  return 0;
}

int cmd_validate(const std::vector<fs::path>& inputs, std::ostream& out) {
  if (inputs.empty()) throw UsageError("validate needs at least one input stream");
  for (const auto& path : inputs) {
    const auto records = validate_stream(path);
    out << path.string() << ": " << records.size() << " records, 0 violations\n";
  }
  return 0;
}

}  // namespace tweetemo::cli
