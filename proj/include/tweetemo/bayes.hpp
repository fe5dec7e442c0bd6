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

#include <span>
#include <vector>

#include "json.hpp"
#include "tweetemo/labels.hpp"
#include "tweetemo/sparse.hpp"

namespace tweetemo {

// Multinomial Naive Bayes over non-negative feature weights (TF-IDF values
// act as fractional counts):
//   log P(t | c) = ln((count(t, c) + alpha) / (total(c) + alpha * |V|))
class MultinomialNb {
 public:
  // Throws DataError on negative feature values, TrainingError on alpha <= 0.
  static MultinomialNb fit(std::span<const SparseVector> x, std::span<const Emotion> y, double alpha);

  std::vector<double> joint_log_likelihood(const SparseVector& x) const;
  std::vector<double> predict_log_proba(const SparseVector& x) const;
  Emotion predict(const SparseVector& x) const;

  const std::vector<Emotion>& classes() const noexcept { return classes_; }
  const std::vector<double>& class_log_priors() const noexcept { return log_priors_; }
  // classes x features, row-major.
  const std::vector<double>& feature_log_likelihood() const noexcept { return log_likelihood_; }
  std::size_t dimension() const noexcept { return dimension_; }
  double alpha() const noexcept { return alpha_; }

  nlohmann::json to_json() const;
  static MultinomialNb from_json(const nlohmann::json& j);

 private:
  std::vector<Emotion> classes_;
  std::vector<double> log_priors_;
  std::vector<double> log_likelihood_;
  std::size_t dimension_ = 0;
  double alpha_ = 1.0;
};

// Gaussian Naive Bayes. Every per-class variance gets
// epsilon = smoothing * (largest per-feature variance over the training set)
// added; when that product is zero, epsilon = max(smoothing, 1e-9).
// Statistics are accumulated sparsely: implicit zeros count as observations.
class GaussianNb {
 public:
  static GaussianNb fit(std::span<const SparseVector> x, std::span<const Emotion> y, double smoothing);

  std::vector<double> joint_log_likelihood(const SparseVector& x) const;
  std::vector<double> predict_log_proba(const SparseVector& x) const;
  Emotion predict(const SparseVector& x) const;

  const std::vector<Emotion>& classes() const noexcept { return classes_; }
  const std::vector<double>& class_log_priors() const noexcept { return log_priors_; }
  // classes x features, row-major.
  const std::vector<double>& means() const noexcept { return means_; }
  const std::vector<double>& variances() const noexcept { return variances_; }
  double epsilon() const noexcept { return epsilon_; }
  double smoothing() const noexcept { return smoothing_; }
  std::size_t dimension() const noexcept { return dimension_; }

  nlohmann::json to_json() const;
  static GaussianNb from_json(const nlohmann::json& j);

 private:
  void precompute();

  std::vector<Emotion> classes_;
  std::vector<double> log_priors_;
  std::vector<double> means_;
  std::vector<double> variances_;
  std::vector<double> zero_point_;  // per class: log density of the all-zero vector
  std::size_t dimension_ = 0;
  double smoothing_ = 0.0;
  double epsilon_ = 0.0;
};

}  // namespace tweetemo
