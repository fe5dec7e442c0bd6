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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "tweetemo/labels.hpp"

namespace tweetemo {

struct ClassMetrics {
  Emotion label{};
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;    // gold count (row sum)
  std::size_t predicted = 0;  // column sum
  // Set when the quantity had a zero denominator and is reported as 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
  bool f1_undefined = false;

  friend bool operator==(const ClassMetrics&, const ClassMetrics&) = default;
};

struct EvalReport {
  std::vector<Emotion> classes;
  // confusion[gold][predicted], indexed by position in `classes`.
  std::vector<std::vector<std::size_t>> confusion;
  std::vector<ClassMetrics> per_class;
  std::size_t total = 0;
  double accuracy = 0.0;
  double macro_f1 = 0.0;
  // From pooled TP/FP/FN counts; equals accuracy for single-label data.
  double micro_f1 = 0.0;
  nlohmann::json provenance = nlohmann::json::object();

  // Each row divided by its support (zero rows stay zero).
  std::vector<std::vector<double>> normalized_confusion() const;
};

using LabelPair = std::pair<Emotion, Emotion>;  // (gold, predicted)

// `classes` defaults to the labels seen in either column. Throws DataError on
// empty input or a label outside an explicit class list.
EvalReport score(std::span<const LabelPair> pairs, std::optional<std::vector<Emotion>> classes = std::nullopt);

// All metrics are recomputed from the counts.
EvalReport report_from_confusion(std::vector<Emotion> classes, std::vector<std::vector<std::size_t>> confusion);

enum class ReportFormat { text, json, csv };
std::string_view to_string(ReportFormat format) noexcept;
ReportFormat report_format_from_string(std::string_view name);

nlohmann::json report_to_json(const EvalReport& report);
EvalReport report_from_json(const nlohmann::json& j);

// text: per-class table (label columns; precision/recall/f1-score/support
// rows), summary lines and the confusion matrix. json: sorted keys.
// csv: confusion counts with label header row and column.
std::string render(const EvalReport& report, ReportFormat format);
// Reads any rendered format back. Text and CSV carry the confusion counts,
// from which the metrics are recomputed; provenance only survives JSON.
EvalReport parse_report(std::string_view document, ReportFormat format);

}  // namespace tweetemo
