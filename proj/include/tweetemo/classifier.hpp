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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tweetemo/bayes.hpp"
#include "tweetemo/corpus.hpp"
#include "tweetemo/svm.hpp"
#include "tweetemo/vectorizer.hpp"

namespace tweetemo {

enum class ModelKind { svm, mnb, gnb };

std::string_view to_string(ModelKind kind) noexcept;
// Throws ParseError for anything other than svm, mnb, gnb.
ModelKind model_kind_from_string(std::string_view name);

struct TrainOptions {
  ModelKind kind = ModelKind::svm;
  SvmConfig svm;
  double alpha = 1.0;       // multinomial NB
  double smoothing = 0.5;   // Gaussian NB
};

// Full text-to-label pipeline: classical preprocessing, TF-IDF, classifier.
class TextClassifier {
 public:
  using Estimator = std::variant<SvmModel, MultinomialNb, GaussianNb>;

  static TextClassifier train(std::span<const LabeledTweet> tweets, const TrainOptions& options);

  ModelKind kind() const noexcept;
  const TfIdfModel& vectorizer() const noexcept { return vectorizer_; }
  const Estimator& estimator() const noexcept { return estimator_; }
  const std::vector<Emotion>& classes() const;

  std::vector<double> predict_log_proba(std::string_view text) const;
  std::vector<double> predict_log_proba(const SparseVector& features) const;
  Emotion predict(std::string_view text) const;

  // Arbitrary caller metadata stored verbatim (provenance).
  nlohmann::json& provenance() noexcept { return provenance_; }
  const nlohmann::json& provenance() const noexcept { return provenance_; }

  nlohmann::json to_json() const;
  static TextClassifier from_json(const nlohmann::json& j);
  void save(const std::filesystem::path& path) const;
  static TextClassifier load(const std::filesystem::path& path);

 private:
  TfIdfModel vectorizer_;
  Estimator estimator_;
  nlohmann::json provenance_ = nlohmann::json::object();
};

// Canonical JSON text used for every artifact: two-space indent, trailing newline.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace tweetemo
