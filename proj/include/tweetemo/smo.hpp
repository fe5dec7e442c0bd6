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
#include <functional>
#include <list>
#include <span>
#include <vector>

#include "tweetemo/sparse.hpp"

namespace tweetemo {

// exp(-gamma * ||x - y||^2)
double rbf_kernel(const SparseVector& x, const SparseVector& y, double gamma) noexcept;

// LRU cache of kernel rows, sized by a byte budget (never fewer than two rows).
class KernelCache {
 public:
  using RowFn = std::function<void(std::size_t row, std::span<double> out)>;

  KernelCache(std::size_t n, std::size_t budget_bytes, RowFn fill);

  // The returned span stays valid until the next call that misses while the
  // cache is full and this row is the least recently used.
  std::span<const double> row(std::size_t i);

  std::size_t capacity_rows() const noexcept { return capacity_; }
  std::size_t hits() const noexcept { return hits_; }
  std::size_t misses() const noexcept { return misses_; }

 private:
  std::size_t n_;
  std::size_t capacity_;
  RowFn fill_;
  std::vector<std::vector<double>> slots_;
  std::vector<std::ptrdiff_t> slot_of_;
  std::list<std::size_t> lru_;  // front = most recent
  std::vector<std::list<std::size_t>::iterator> lru_pos_;
  std::vector<std::size_t> row_in_slot_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

struct SmoOptions {
  double C = 1.0;
  double gamma = 1.0;
  // Stop once the maximal KKT violation m(alpha) - M(alpha) drops below tol.
  double tol = 1e-3;
  // One pass is n pair updates.
  std::size_t max_passes = 1000;
  std::size_t cache_bytes = std::size_t{256} << 20;
};

struct SmoSolution {
  std::vector<double> alpha;
  // f(x) = sum_i alpha_i y_i K(x_i, x) + bias
  double bias = 0.0;
  // Dual objective sum(alpha) - 1/2 alpha^T Q alpha.
  double objective = 0.0;
  std::size_t iterations = 0;
  double violation = 0.0;
};

// Solves the C-SVM dual with an RBF kernel by sequential minimal optimization,
// choosing the maximal violating pair at every step. y entries are +1 / -1.
// Throws TrainingError when the iteration budget runs out.
SmoSolution solve_smo(std::span<const SparseVector> x, std::span<const int> y, const SmoOptions& options);

}  // namespace tweetemo
