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
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "json.hpp"

namespace tweetemo {

// Sparse row vector: strictly increasing indices, non-zero values.
struct SparseVector {
  std::vector<std::uint32_t> indices;
  std::vector<double> values;
  std::size_t dimension = 0;

  std::size_t nnz() const noexcept { return indices.size(); }
  bool empty() const noexcept { return indices.empty(); }

  // Drops exact zeros.
  static SparseVector from_dense(std::span<const double> dense);
  // Pairs may arrive unsorted; duplicate indices are summed, zeros dropped.
  static SparseVector from_pairs(std::vector<std::pair<std::uint32_t, double>> pairs,
                                 std::size_t dimension);
  std::vector<double> to_dense() const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

double dot(const SparseVector& a, const SparseVector& b) noexcept;
double squared_norm(const SparseVector& a) noexcept;
// Merge-based, exact for sparse inputs (no cancellation through norms).
double squared_distance(const SparseVector& a, const SparseVector& b) noexcept;

// {"dim": d, "idx": [...], "val": [...]}
nlohmann::json to_json(const SparseVector& v);
SparseVector sparse_from_json(const nlohmann::json& j);

}  // namespace tweetemo
