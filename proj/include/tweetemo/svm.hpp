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
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "tweetemo/labels.hpp"
#include "tweetemo/platt.hpp"
#include "tweetemo/smo.hpp"
#include "tweetemo/sparse.hpp"

namespace tweetemo {

struct SvmConfig {
  double C = 1.0;
  // nullopt selects 1 / (n_features * mean feature variance) at fit time.
  std::optional<double> gamma;
  double tol = 1e-3;
  std::size_t max_passes = 1000;
  std::size_t cache_mb = 256;
  std::size_t platt_folds = 3;
  std::uint64_t seed = 42;
  // Not persisted: results do not depend on it.
  std::size_t threads = 1;

  // Throws TrainingError for C <= 0, gamma <= 0, tol <= 0 or zero passes.
  void validate() const;
};

// 1 / sum_j Var(x_j) over the rows, or 1 when every column is constant.
double auto_gamma(std::span<const SparseVector> x);

struct BinarySvm {
  std::vector<SparseVector> support_vectors;
  std::vector<double> dual_coefs;  // alpha_i * y_i
  std::vector<double> alphas;      // alpha_i, kept for feasibility checks
  double bias = 0.0;
  PlattParams platt;
  std::size_t iterations = 0;

  double decision(const SparseVector& x, double gamma) const;
};

// Values with alpha <= this are treated as zero and dropped.
inline constexpr double kSupportThreshold = 1e-8;

// Trains on +1/-1 labels (both must be present; config.gamma must be set),
// then fits Platt parameters on out-of-fold decision values from
// config.platt_folds stratified folds seeded by `fold_seed`. When a label has
// fewer members than folds the in-sample decision values are used instead.
BinarySvm train_binary(std::span<const SparseVector> x, std::span<const int> y,
                       const SvmConfig& config, std::uint64_t fold_seed);

// One-vs-rest RBF SVM with per-class Platt calibration.
class SvmModel {
 public:
  SvmModel() = default;

  // Classes are those present in `labels`, in encoding order (at least two).
  static SvmModel fit(std::span<const SparseVector> x, std::span<const Emotion> labels, SvmConfig config);

  const SvmConfig& config() const noexcept { return config_; }
  double gamma() const noexcept { return *config_.gamma; }
  const std::vector<Emotion>& classes() const noexcept { return classes_; }
  const std::vector<BinarySvm>& binaries() const noexcept { return binaries_; }

  // One-vs-rest decision value per class.
  std::vector<double> decision_values(const SparseVector& x) const;

  // log of sigmoid(a_k f_k + b_k) normalized to sum to one over the classes.
  std::vector<double> predict_log_proba(const SparseVector& x) const;

  // argmax of predict_log_proba, lowest class index on ties.
  Emotion predict(const SparseVector& x) const;

  nlohmann::json to_json() const;
  static SvmModel from_json(const nlohmann::json& j);

 private:
  SvmConfig config_;
  std::vector<Emotion> classes_;
  std::vector<BinarySvm> binaries_;
  std::size_t dimension_ = 0;
};

// Normalizes per-class log-scores into log-probabilities (subtracts logsumexp).
std::vector<double> normalize_log(std::vector<double> log_scores);
double logsumexp(std::span<const double> v);
// Lowest index among maximal entries.
std::size_t argmax(std::span<const double> v);

}  // namespace tweetemo
