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

#include "tweetemo/vectorizer.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tweetemo/error.hpp"

namespace tweetemo {

namespace {
constexpr int kFormatVersion = 1;
}

TfIdfModel TfIdfModel::fit(std::span<const TokenList> docs) {
  std::map<std::string, std::size_t> df;
  for (const auto& doc : docs) {
    TokenList unique(doc.begin(), doc.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
    for (auto& t : unique) ++df[std::move(t)];
  }
  if (df.empty()) throw DataError("cannot fit TF-IDF: every training document is empty");

  TfIdfModel model;
  model.n_docs_ = docs.size();
  const double n = static_cast<double>(docs.size());
  model.terms_.reserve(df.size());
  model.idf_.reserve(df.size());
  for (auto& [term, count] : df) {
    model.columns_.emplace(term, static_cast<std::uint32_t>(model.terms_.size()));
    model.terms_.push_back(term);
    model.idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
  }
  return model;
}

TfIdfModel TfIdfModel::fit_transform(std::span<const TokenList> docs, std::vector<SparseVector>& out) {
  // Per-document term counts are collected once and reused for both the
  // document frequencies and the output rows.
  std::vector<std::map<std::string, double>> counts(docs.size());
  std::map<std::string, std::size_t> df;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (const auto& t : docs[d]) counts[d][t] += 1.0;
    for (const auto& [t, c] : counts[d]) ++df[t];
  }
  if (df.empty()) throw DataError("cannot fit TF-IDF: every training document is empty");

  TfIdfModel model;
  model.n_docs_ = docs.size();
  const double n = static_cast<double>(docs.size());
  for (const auto& [term, count] : df) {
    model.columns_.emplace(term, static_cast<std::uint32_t>(model.terms_.size()));
    model.terms_.push_back(term);
    model.idf_.push_back(std::log((1.0 + n) / (1.0 + static_cast<double>(count))) + 1.0);
  }

  out.clear();
  out.reserve(docs.size());
  for (const auto& doc_counts : counts) {
    std::vector<std::pair<std::uint32_t, double>> row;
    row.reserve(doc_counts.size());
    for (const auto& [t, c] : doc_counts) row.emplace_back(model.columns_.at(t), c);
    out.push_back(model.weigh(std::move(row)));
  }
  return model;
}

SparseVector TfIdfModel::weigh(std::vector<std::pair<std::uint32_t, double>> counts) const {
  auto v = SparseVector::from_pairs(std::move(counts), dimension());
  double norm = 0.0;
  for (std::size_t k = 0; k < v.indices.size(); ++k) {
    v.values[k] *= idf_[v.indices[k]];
    norm += v.values[k] * v.values[k];
  }
  if (norm > 0.0) {
    norm = std::sqrt(norm);
    for (auto& x : v.values) x /= norm;
  }
  return v;
}

SparseVector TfIdfModel::transform(const TokenList& doc) const {
  std::vector<std::pair<std::uint32_t, double>> counts;
  counts.reserve(doc.size());
  for (const auto& t : doc) {
    if (auto it = columns_.find(t); it != columns_.end()) counts.emplace_back(it->second, 1.0);
  }
  return weigh(std::move(counts));
}

std::vector<SparseVector> TfIdfModel::transform_all(std::span<const TokenList> docs) const {
  std::vector<SparseVector> out;
  out.reserve(docs.size());
  for (const auto& doc : docs) out.push_back(transform(doc));
  return out;
}

long TfIdfModel::column_of(const std::string& token) const {
  auto it = columns_.find(token);
  return it == columns_.end() ? -1 : static_cast<long>(it->second);
}

nlohmann::json TfIdfModel::to_json() const {
  nlohmann::json vocab = nlohmann::json::object();
  for (std::size_t i = 0; i < terms_.size(); ++i) vocab[terms_[i]] = i;
  return {{"version", kFormatVersion},
          {"n_docs", n_docs_},
          {"vocabulary", std::move(vocab)},
          {"idf", idf_}};
}

TfIdfModel TfIdfModel::from_json(const nlohmann::json& j) {
  if (j.at("version").get<int>() != kFormatVersion) {
    throw ParseError("unsupported TF-IDF model version " + j.at("version").dump());
  }
  TfIdfModel model;
  model.n_docs_ = j.at("n_docs").get<std::size_t>();
  model.idf_ = j.at("idf").get<std::vector<double>>();
  const auto& vocab = j.at("vocabulary");
  model.terms_.assign(vocab.size(), {});
  std::vector<bool> filled(vocab.size(), false);
  for (const auto& [term, index] : vocab.items()) {
    const auto i = index.get<std::size_t>();
    if (i >= model.terms_.size() || filled[i]) {
      throw ParseError("TF-IDF vocabulary indices are not a bijection onto [0, |V|)");
    }
    filled[i] = true;
    model.terms_[i] = term;
    model.columns_.emplace(term, static_cast<std::uint32_t>(i));
  }
  if (model.idf_.size() != model.terms_.size()) {
    throw ParseError("TF-IDF idf length does not match vocabulary size");
  }
  return model;
}

}  // namespace tweetemo
