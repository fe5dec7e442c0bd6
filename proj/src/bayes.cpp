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

#include "tweetemo/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tweetemo/error.hpp"
#include "tweetemo/svm.hpp"

namespace tweetemo {

namespace {

constexpr int kFormatVersion = 1;

struct ClassIndex {
  std::vector<Emotion> classes;
  std::vector<std::size_t> row_class;  // class slot of each row
  std::vector<double> counts;
};

ClassIndex index_classes(std::span<const SparseVector> x, std::span<const Emotion> y) {
  if (x.size() != y.size()) throw TrainingError("Naive Bayes fit: feature/label count mismatch");
  if (x.empty()) throw TrainingError("Naive Bayes fit: no training data");
  ClassIndex ci;
  ci.classes = normalized_classes({y.begin(), y.end()});
  ci.counts.assign(ci.classes.size(), 0.0);
  for (auto label : y) {
    const auto slot = static_cast<std::size_t>(
        std::lower_bound(ci.classes.begin(), ci.classes.end(), label) - ci.classes.begin());
    ci.row_class.push_back(slot);
    ci.counts[slot] += 1.0;
  }
  return ci;
}

std::vector<double> log_priors(const ClassIndex& ci) {
  const double n = static_cast<double>(ci.row_class.size());
  std::vector<double> out;
  for (double c : ci.counts) out.push_back(std::log(c / n));
  return out;
}

nlohmann::json class_names(const std::vector<Emotion>& classes) {
  nlohmann::json out = nlohmann::json::array();
  for (auto c : classes) out.push_back(to_string(c));
  return out;
}

std::vector<Emotion> classes_from_json(const nlohmann::json& j) {
  std::vector<Emotion> out;
  for (const auto& c : j) out.push_back(emotion_from_string(c.get<std::string>()));
  return out;
}

void check_dimension(const SparseVector& x, std::size_t dim) {
  if (x.dimension != dim) {
    throw DataError("feature dimension " + std::to_string(x.dimension) + " does not match model dimension " +
                    std::to_string(dim));
  }
}

}  // namespace

MultinomialNb MultinomialNb::fit(std::span<const SparseVector> x, std::span<const Emotion> y, double alpha) {
  if (!(alpha > 0.0)) throw TrainingError("Multinomial NB: alpha must be > 0");
  const auto ci = index_classes(x, y);
  MultinomialNb m;
  m.classes_ = ci.classes;
  m.alpha_ = alpha;
  m.dimension_ = x.front().dimension;
  const std::size_t k = m.classes_.size();
  const std::size_t d = m.dimension_;

  std::vector<double> counts(k * d, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    check_dimension(x[i], d);
    const std::size_t c = ci.row_class[i];
    for (std::size_t e = 0; e < x[i].nnz(); ++e) {
      const double v = x[i].values[e];
      if (v < 0.0) throw DataError("Multinomial NB: negative feature value in row " + std::to_string(i));
      counts[c * d + x[i].indices[e]] += v;
    }
  }
  m.log_likelihood_.resize(k * d);
  for (std::size_t c = 0; c < k; ++c) {
    double total = 0.0;
    for (std::size_t t = 0; t < d; ++t) total += counts[c * d + t];
    const double denom = std::log(total + alpha * static_cast<double>(d));
    for (std::size_t t = 0; t < d; ++t) {
      m.log_likelihood_[c * d + t] = std::log(counts[c * d + t] + alpha) - denom;
    }
  }
  m.log_priors_ = log_priors(ci);
  return m;
}

std::vector<double> MultinomialNb::joint_log_likelihood(const SparseVector& x) const {
  check_dimension(x, dimension_);
  std::vector<double> jll = log_priors_;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const double* row = &log_likelihood_[c * dimension_];
    for (std::size_t e = 0; e < x.nnz(); ++e) jll[c] += x.values[e] * row[x.indices[e]];
  }
  return jll;
}

std::vector<double> MultinomialNb::predict_log_proba(const SparseVector& x) const {
  return normalize_log(joint_log_likelihood(x));
}

Emotion MultinomialNb::predict(const SparseVector& x) const {
  return classes_[argmax(joint_log_likelihood(x))];
}

nlohmann::json MultinomialNb::to_json() const {
  return {{"version", kFormatVersion},
          {"alpha", alpha_},
          {"dimension", dimension_},
          {"classes", class_names(classes_)},
          {"class_log_priors", log_priors_},
          {"feature_log_likelihood", log_likelihood_}};
}

MultinomialNb MultinomialNb::from_json(const nlohmann::json& j) {
  if (j.at("version").get<int>() != kFormatVersion) throw ParseError("unsupported multinomial NB version");
  MultinomialNb m;
  m.alpha_ = j.at("alpha").get<double>();
  m.dimension_ = j.at("dimension").get<std::size_t>();
  m.classes_ = classes_from_json(j.at("classes"));
  m.log_priors_ = j.at("class_log_priors").get<std::vector<double>>();
  m.log_likelihood_ = j.at("feature_log_likelihood").get<std::vector<double>>();
  if (m.log_priors_.size() != m.classes_.size() ||
      m.log_likelihood_.size() != m.classes_.size() * m.dimension_) {
    throw ParseError("multinomial NB: parameter shapes do not match classes x dimension");
  }
  return m;
}

GaussianNb GaussianNb::fit(std::span<const SparseVector> x, std::span<const Emotion> y, double smoothing) {
  if (!(smoothing >= 0.0)) throw TrainingError("Gaussian NB: smoothing must be >= 0");
  const auto ci = index_classes(x, y);
  GaussianNb m;
  m.classes_ = ci.classes;
  m.smoothing_ = smoothing;
  m.dimension_ = x.front().dimension;
  const std::size_t k = m.classes_.size();
  const std::size_t d = m.dimension_;

  // Two passes: means, then squared deviations over the non-zeros plus the
  // implicit zeros' contribution (n_c - nnz) * mean^2.
  std::vector<double> sums(k * d, 0.0), all_sums(d, 0.0);
  std::vector<double> nnz(k * d, 0.0), all_nnz(d, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    check_dimension(x[i], d);
    const std::size_t c = ci.row_class[i];
    for (std::size_t e = 0; e < x[i].nnz(); ++e) {
      const auto t = x[i].indices[e];
      sums[c * d + t] += x[i].values[e];
      nnz[c * d + t] += 1.0;
      all_sums[t] += x[i].values[e];
      all_nnz[t] += 1.0;
    }
  }
  m.means_.resize(k * d);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t t = 0; t < d; ++t) m.means_[c * d + t] = sums[c * d + t] / ci.counts[c];
  }
  const double n = static_cast<double>(x.size());
  std::vector<double> all_means(d);
  for (std::size_t t = 0; t < d; ++t) all_means[t] = all_sums[t] / n;

  std::vector<double> sq(k * d, 0.0), all_sq(d, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t c = ci.row_class[i];
    for (std::size_t e = 0; e < x[i].nnz(); ++e) {
      const auto t = x[i].indices[e];
      const double dc = x[i].values[e] - m.means_[c * d + t];
      const double da = x[i].values[e] - all_means[t];
      sq[c * d + t] += dc * dc;
      all_sq[t] += da * da;
    }
  }
  double max_var = 0.0;
  for (std::size_t t = 0; t < d; ++t) {
    const double var = (all_sq[t] + (n - all_nnz[t]) * all_means[t] * all_means[t]) / n;
    max_var = std::max(max_var, var);
  }
  m.epsilon_ = smoothing * max_var;
  if (!(m.epsilon_ > 0.0)) m.epsilon_ = std::max(smoothing, 1e-9);

  m.variances_.resize(k * d);
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t t = 0; t < d; ++t) {
      const double mu = m.means_[c * d + t];
      const double var = (sq[c * d + t] + (ci.counts[c] - nnz[c * d + t]) * mu * mu) / ci.counts[c];
      m.variances_[c * d + t] = var + m.epsilon_;
    }
  }
  m.log_priors_ = log_priors(ci);
  m.precompute();
  return m;
}

void GaussianNb::precompute() {
  const std::size_t d = dimension_;
  zero_point_.assign(classes_.size(), 0.0);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    double s = 0.0;
    for (std::size_t t = 0; t < d; ++t) {
      const double var = variances_[c * d + t];
      const double mu = means_[c * d + t];
      s += -0.5 * std::log(2.0 * std::numbers::pi * var) - mu * mu / (2.0 * var);
    }
    zero_point_[c] = s;
  }
}

std::vector<double> GaussianNb::joint_log_likelihood(const SparseVector& x) const {
  check_dimension(x, dimension_);
  const std::size_t d = dimension_;
  std::vector<double> jll(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    double s = log_priors_[c] + zero_point_[c];
    for (std::size_t e = 0; e < x.nnz(); ++e) {
      const auto t = x.indices[e];
      const double var = variances_[c * d + t];
      const double mu = means_[c * d + t];
      const double v = x.values[e];
      s += (mu * mu - (v - mu) * (v - mu)) / (2.0 * var);
    }
    jll[c] = s;
  }
  return jll;
}

std::vector<double> GaussianNb::predict_log_proba(const SparseVector& x) const {
  return normalize_log(joint_log_likelihood(x));
}

Emotion GaussianNb::predict(const SparseVector& x) const {
  return classes_[argmax(joint_log_likelihood(x))];
}

nlohmann::json GaussianNb::to_json() const {
  return {{"version", kFormatVersion},
          {"smoothing", smoothing_},
          {"epsilon", epsilon_},
          {"dimension", dimension_},
          {"classes", class_names(classes_)},
          {"class_log_priors", log_priors_},
          {"means", means_},
          {"variances", variances_}};
}

GaussianNb GaussianNb::from_json(const nlohmann::json& j) {
  if (j.at("version").get<int>() != kFormatVersion) throw ParseError("unsupported Gaussian NB version");
  GaussianNb m;
  m.smoothing_ = j.at("smoothing").get<double>();
  m.epsilon_ = j.at("epsilon").get<double>();
  m.dimension_ = j.at("dimension").get<std::size_t>();
  m.classes_ = classes_from_json(j.at("classes"));
  m.log_priors_ = j.at("class_log_priors").get<std::vector<double>>();
  m.means_ = j.at("means").get<std::vector<double>>();
  m.variances_ = j.at("variances").get<std::vector<double>>();
  const std::size_t cells = m.classes_.size() * m.dimension_;
  if (m.log_priors_.size() != m.classes_.size() || m.means_.size() != cells || m.variances_.size() != cells) {
    throw ParseError("Gaussian NB: parameter shapes do not match classes x dimension");
  }
  m.precompute();
  return m;
}

}  // namespace tweetemo
