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
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "tweetemo/sparse.hpp"
#include "tweetemo/text.hpp"

namespace tweetemo {

// Vocabulary and smoothed idf weights fitted on a training corpus:
//   idf(t) = ln((1 + N) / (1 + df(t))) + 1
// Term values are raw counts times idf, then L2-normalized.
class TfIdfModel {
 public:
  TfIdfModel() = default;

  // Throws DataError when every document is empty.
  static TfIdfModel fit(std::span<const TokenList> docs);

  // Fits and transforms the same corpus in one pass over the counts.
  static TfIdfModel fit_transform(std::span<const TokenList> docs, std::vector<SparseVector>& out);

  // Out-of-vocabulary tokens are ignored; an empty result is the zero vector.
  SparseVector transform(const TokenList& doc) const;
  std::vector<SparseVector> transform_all(std::span<const TokenList> docs) const;

  std::size_t dimension() const noexcept { return terms_.size(); }
  std::size_t n_docs_fitted() const noexcept { return n_docs_; }
  // Terms in column order (sorted).
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  const std::vector<double>& idf() const noexcept { return idf_; }
  // -1 when absent.
  long column_of(const std::string& token) const;

  nlohmann::json to_json() const;
  static TfIdfModel from_json(const nlohmann::json& j);

 private:
  SparseVector weigh(std::vector<std::pair<std::uint32_t, double>> counts) const;

  std::vector<std::string> terms_;
  std::unordered_map<std::string, std::uint32_t> columns_;
  std::vector<double> idf_;
  std::size_t n_docs_ = 0;
};

}  // namespace tweetemo
