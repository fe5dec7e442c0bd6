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

// Dense brute-force TF-IDF, written independently of the library:
// vocabulary from std::set, counts by linear scan, idf = ln((1+N)/(1+df)) + 1,
// rows scaled to unit L2 norm.

#include <cmath>
#include <set>
#include <string>
#include <vector>

namespace tweetemo::oracle {

struct DenseTfIdf {
  std::vector<std::string> vocabulary;
  std::vector<double> idf;
  std::vector<std::vector<double>> rows;
};

inline DenseTfIdf brute_force_tfidf(const std::vector<std::vector<std::string>>& train,
                                    const std::vector<std::vector<std::string>>& apply_to) {
  DenseTfIdf out;
  std::set<std::string> vocab;
  for (const auto& d : train) vocab.insert(d.begin(), d.end());
  out.vocabulary.assign(vocab.begin(), vocab.end());
  const double n = static_cast<double>(train.size());
  for (const auto& term : out.vocabulary) {
    double df = 0;
    for (const auto& d : train) {
      bool found = false;
      for (const auto& t : d) found = found || t == term;
      if (found) df += 1;
    }
    out.idf.push_back(std::log((1.0 + n) / (1.0 + df)) + 1.0);
  }
  for (const auto& d : apply_to) {
    std::vector<double> row(out.vocabulary.size(), 0.0);
    for (std::size_t j = 0; j < out.vocabulary.size(); ++j) {
      double tf = 0;
      for (const auto& t : d) tf += t == out.vocabulary[j] ? 1.0 : 0.0;
      row[j] = tf * out.idf[j];
    }
    double norm = 0;
    for (double v : row) norm += v * v;
    norm = std::sqrt(norm);
    if (norm > 0) {
      for (double& v : row) v /= norm;
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace tweetemo::oracle
