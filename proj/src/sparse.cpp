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

#include "tweetemo/sparse.hpp"

#include <algorithm>

#include "tweetemo/error.hpp"

namespace tweetemo {

SparseVector SparseVector::from_dense(std::span<const double> dense) {
  SparseVector v;
  v.dimension = dense.size();
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0.0) {
      v.indices.push_back(static_cast<std::uint32_t>(i));
      v.values.push_back(dense[i]);
    }
  }
  return v;
}

SparseVector SparseVector::from_pairs(std::vector<std::pair<std::uint32_t, double>> pairs,
                                      std::size_t dimension) {
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector v;
  v.dimension = dimension;
  for (std::size_t i = 0; i < pairs.size();) {
    const auto index = pairs[i].first;
    double sum = 0.0;
    for (; i < pairs.size() && pairs[i].first == index; ++i) sum += pairs[i].second;
    if (sum != 0.0) {
      v.indices.push_back(index);
      v.values.push_back(sum);
    }
  }
  return v;
}

std::vector<double> SparseVector::to_dense() const {
  std::vector<double> dense(dimension, 0.0);
  for (std::size_t k = 0; k < indices.size(); ++k) dense[indices[k]] = values[k];
  return dense;
}

double dot(const SparseVector& a, const SparseVector& b) noexcept {
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.indices.size() && j < b.indices.size()) {
    if (a.indices[i] == b.indices[j]) {
      sum += a.values[i++] * b.values[j++];
    } else if (a.indices[i] < b.indices[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return sum;
}

double squared_norm(const SparseVector& a) noexcept {
  double sum = 0.0;
  for (double v : a.values) sum += v * v;
  return sum;
}

double squared_distance(const SparseVector& a, const SparseVector& b) noexcept {
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.indices.size() || j < b.indices.size()) {
    double d;
    if (j == b.indices.size() || (i < a.indices.size() && a.indices[i] < b.indices[j])) {
      d = a.values[i++];
    } else if (i == a.indices.size() || b.indices[j] < a.indices[i]) {
      d = b.values[j++];
    } else {
      d = a.values[i++] - b.values[j++];
    }
    sum += d * d;
  }
  return sum;
}

nlohmann::json to_json(const SparseVector& v) {
  return {{"dim", v.dimension}, {"idx", v.indices}, {"val", v.values}};
}

SparseVector sparse_from_json(const nlohmann::json& j) {
  SparseVector v;
  v.dimension = j.at("dim").get<std::size_t>();
  v.indices = j.at("idx").get<std::vector<std::uint32_t>>();
  v.values = j.at("val").get<std::vector<double>>();
  if (v.indices.size() != v.values.size()) throw ParseError("sparse vector: idx/val length mismatch");
  for (std::size_t k = 0; k < v.indices.size(); ++k) {
    if ((k > 0 && v.indices[k] <= v.indices[k - 1]) || v.indices[k] >= v.dimension) {
      throw ParseError("sparse vector: indices must be strictly increasing and < dim");
    }
  }
  return v;
}

}  // namespace tweetemo
