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

#include "tweetemo/classifier.hpp"

#include "tweetemo/checksum.hpp"
#include "tweetemo/error.hpp"
#include "tweetemo/text.hpp"

namespace tweetemo {

namespace {
constexpr int kFormatVersion = 1;
}

std::string_view to_string(ModelKind kind) noexcept {
  switch (kind) {
    case ModelKind::svm: return "svm";
    case ModelKind::mnb: return "mnb";
    case ModelKind::gnb: return "gnb";
  }
  return "?";
}

ModelKind model_kind_from_string(std::string_view name) {
  if (name == "svm") return ModelKind::svm;
  if (name == "mnb") return ModelKind::mnb;
  if (name == "gnb") return ModelKind::gnb;
  throw ParseError("unknown model '" + std::string(name) + "' (expected svm, mnb or gnb)");
}

TextClassifier TextClassifier::train(std::span<const LabeledTweet> tweets, const TrainOptions& options) {
  if (tweets.empty()) throw TrainingError("no training tweets");
  std::vector<TokenList> docs;
  std::vector<Emotion> labels;
  docs.reserve(tweets.size());
  for (const auto& t : tweets) {
    docs.push_back(preprocess_classical(t.text));
    labels.push_back(t.label);
  }
  TextClassifier out;
  std::vector<SparseVector> x;
  out.vectorizer_ = TfIdfModel::fit_transform(docs, x);
  switch (options.kind) {
    case ModelKind::svm: out.estimator_ = SvmModel::fit(x, labels, options.svm); break;
    case ModelKind::mnb: out.estimator_ = MultinomialNb::fit(x, labels, options.alpha); break;
    case ModelKind::gnb: out.estimator_ = GaussianNb::fit(x, labels, options.smoothing); break;
  }
  return out;
}

ModelKind TextClassifier::kind() const noexcept {
  return static_cast<ModelKind>(estimator_.index());
}

const std::vector<Emotion>& TextClassifier::classes() const {
  return std::visit([](const auto& m) -> const std::vector<Emotion>& { return m.classes(); }, estimator_);
}

std::vector<double> TextClassifier::predict_log_proba(const SparseVector& features) const {
  return std::visit([&](const auto& m) { return m.predict_log_proba(features); }, estimator_);
}

std::vector<double> TextClassifier::predict_log_proba(std::string_view text) const {
  return predict_log_proba(vectorizer_.transform(preprocess_classical(text)));
}

Emotion TextClassifier::predict(std::string_view text) const {
  return classes()[argmax(predict_log_proba(text))];
}

nlohmann::json TextClassifier::to_json() const {
  nlohmann::json j;
  j["format"] = "tweetemo-model";
  j["version"] = kFormatVersion;
  j["model"] = to_string(kind());
  j["provenance"] = provenance_;
  j["vectorizer"] = vectorizer_.to_json();
  j["estimator"] = std::visit([](const auto& m) { return m.to_json(); }, estimator_);
  return j;
}

TextClassifier TextClassifier::from_json(const nlohmann::json& j) {
  try {
    if (j.at("format").get<std::string>() != "tweetemo-model") throw ParseError("not a tweetemo model file");
    if (j.at("version").get<int>() != kFormatVersion) throw ParseError("unsupported model file version");
    TextClassifier out;
    out.vectorizer_ = TfIdfModel::from_json(j.at("vectorizer"));
    const auto& e = j.at("estimator");
    switch (model_kind_from_string(j.at("model").get<std::string>())) {
      case ModelKind::svm: out.estimator_ = SvmModel::from_json(e); break;
      case ModelKind::mnb: out.estimator_ = MultinomialNb::from_json(e); break;
      case ModelKind::gnb: out.estimator_ = GaussianNb::from_json(e); break;
    }
    out.provenance_ = j.value("provenance", nlohmann::json::object());
    return out;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed model file: ") + ex.what());
  }
}

void TextClassifier::save(const std::filesystem::path& path) const {
  write_file(path, dump_canonical(to_json()));
}

TextClassifier TextClassifier::load(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
  return from_json(j);
}

std::string dump_canonical(const nlohmann::json& j) {
  return j.dump(2, ' ', false, nlohmann::json::error_handler_t::strict) + "\n";
}

}  // namespace tweetemo
