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

#include "tweetemo/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tweetemo/error.hpp"
#include "tweetemo/parallel.hpp"
#include "tweetemo/random.hpp"

namespace tweetemo {

namespace {

constexpr int kFormatVersion = 1;

SmoOptions smo_options(const SvmConfig& config) {
  SmoOptions o;
  o.C = config.C;
  o.gamma = *config.gamma;
  o.tol = config.tol;
  o.max_passes = config.max_passes;
  o.cache_bytes = config.cache_mb << 20;
  return o;
}

BinarySvm from_solution(std::span<const SparseVector> x, std::span<const int> y, const SmoSolution& sol) {
  BinarySvm b;
  b.bias = sol.bias;
  b.iterations = sol.iterations;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sol.alpha[i] > kSupportThreshold) {
      b.support_vectors.push_back(x[i]);
      b.alphas.push_back(sol.alpha[i]);
      b.dual_coefs.push_back(sol.alpha[i] * y[i]);
    }
  }
  return b;
}

struct FoldPlan {
  std::vector<std::size_t> fold_of;  // empty: in-sample calibration
  std::size_t folds = 0;
};

FoldPlan plan_folds(std::span<const int> y, std::size_t folds, std::uint64_t seed) {
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < y.size(); ++i) (y[i] > 0 ? pos : neg).push_back(i);
  FoldPlan plan;
  if (folds < 2 || pos.size() < folds || neg.size() < folds) return plan;
  plan.folds = folds;
  plan.fold_of.assign(y.size(), 0);
  SplitMix64 rng(seed);
  for (auto* group : {&pos, &neg}) {
    shuffle(*group, rng);
    for (std::size_t k = 0; k < group->size(); ++k) plan.fold_of[(*group)[k]] = k % folds;
  }
  return plan;
}

// Out-of-fold decision values for one fold.
void cross_decisions(std::span<const SparseVector> x, std::span<const int> y, const FoldPlan& plan,
                     std::size_t fold, const SvmConfig& config, std::vector<double>& out) {
  std::vector<SparseVector> train_x;
  std::vector<int> train_y;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (plan.fold_of[i] != fold) {
      train_x.push_back(x[i]);
      train_y.push_back(y[i]);
    }
  }
  const auto sol = solve_smo(train_x, train_y, smo_options(config));
  const auto model = from_solution(train_x, train_y, sol);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (plan.fold_of[i] == fold) out[i] = model.decision(x[i], *config.gamma);
  }
}

void check_binary_labels(std::span<const int> y) {
  bool pos = false, neg = false;
  for (int v : y) {
    if (v == 1) pos = true;
    else if (v == -1) neg = true;
    else throw TrainingError("binary labels must be +1 or -1");
  }
  if (!pos || !neg) throw TrainingError("binary SVM training requires both +1 and -1 labels");
}

}  // namespace

void SvmConfig::validate() const {
  if (!(C > 0.0)) throw TrainingError("SVM config: C must be > 0");
  if (gamma && !(*gamma > 0.0)) throw TrainingError("SVM config: gamma must be > 0");
  if (!(tol > 0.0)) throw TrainingError("SVM config: tol must be > 0");
  if (max_passes == 0) throw TrainingError("SVM config: max_passes must be > 0");
}

double auto_gamma(std::span<const SparseVector> x) {
  if (x.empty()) return 1.0;
  const std::size_t dim = x.front().dimension;
  std::vector<double> mean(dim, 0.0);
  double mean_sq_norm = 0.0;
  for (const auto& v : x) {
    for (std::size_t k = 0; k < v.nnz(); ++k) mean[v.indices[k]] += v.values[k];
    mean_sq_norm += squared_norm(v);
  }
  const double n = static_cast<double>(x.size());
  double mean_norm_sq = 0.0;
  for (auto& m : mean) {
    m /= n;
    mean_norm_sq += m * m;
  }
  // sum_j Var(x_j) = E||x||^2 - ||E x||^2
  const double total_var = mean_sq_norm / n - mean_norm_sq;
  return total_var > 0.0 ? 1.0 / total_var : 1.0;
}

double BinarySvm::decision(const SparseVector& x, double gamma) const {
  double f = bias;
  for (std::size_t i = 0; i < support_vectors.size(); ++i) {
    f += dual_coefs[i] * rbf_kernel(support_vectors[i], x, gamma);
  }
  return f;
}

BinarySvm train_binary(std::span<const SparseVector> x, std::span<const int> y, const SvmConfig& config,
                       std::uint64_t fold_seed) {
  if (x.size() != y.size()) throw TrainingError("train_binary: feature/label count mismatch");
  check_binary_labels(y);
  config.validate();
  if (!config.gamma) throw TrainingError("train_binary: gamma must be resolved");

  const auto plan = plan_folds(y, config.platt_folds, fold_seed);
  std::vector<double> decisions(x.size());
  BinarySvm model;
  // Task 0 is the full fit; tasks 1..folds produce out-of-fold decisions.
  parallel_for(1 + plan.folds, config.threads, [&](std::size_t task) {
    if (task == 0) {
      model = from_solution(x, y, solve_smo(x, y, smo_options(config)));
    } else {
      cross_decisions(x, y, plan, task - 1, config, decisions);
    }
  });
  if (plan.folds == 0) {
    for (std::size_t i = 0; i < x.size(); ++i) decisions[i] = model.decision(x[i], *config.gamma);
  }
  model.platt = fit_platt(decisions, y);
  return model;
}

SvmModel SvmModel::fit(std::span<const SparseVector> x, std::span<const Emotion> labels, SvmConfig config) {
  if (x.size() != labels.size()) throw TrainingError("SVM fit: feature/label count mismatch");
  if (x.empty()) throw TrainingError("SVM fit: no training data");
  if (!config.gamma) config.gamma = auto_gamma(x);
  config.validate();

  SvmModel model;
  model.config_ = config;
  model.dimension_ = x.front().dimension;
  model.classes_ = normalized_classes({labels.begin(), labels.end()});
  if (model.classes_.size() < 2) throw TrainingError("SVM fit: at least two classes are required");

  const std::size_t k = model.classes_.size();
  model.binaries_.resize(k);
  std::vector<std::vector<int>> ys(k, std::vector<int>(x.size()));
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < x.size(); ++i) ys[c][i] = labels[i] == model.classes_[c] ? 1 : -1;
  }
  // Each binary trains its own folds sequentially; threads split classes.
  SvmConfig per_binary = config;
  per_binary.threads = 1;
  parallel_for(k, config.threads, [&](std::size_t c) {
    model.binaries_[c] =
        train_binary(x, ys[c], per_binary, mix_seed(config.seed, index_of(model.classes_[c])));
  });
  return model;
}

std::vector<double> SvmModel::decision_values(const SparseVector& x) const {
  std::vector<double> f(binaries_.size());
  for (std::size_t c = 0; c < binaries_.size(); ++c) f[c] = binaries_[c].decision(x, gamma());
  return f;
}

double logsumexp(std::span<const double> v) {
  if (v.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(v.begin(), v.end());
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double x : v) s += std::exp(x - m);
  return m + std::log(s);
}

std::vector<double> normalize_log(std::vector<double> log_scores) {
  const double z = logsumexp(log_scores);
  for (auto& v : log_scores) v -= z;
  return log_scores;
}

std::size_t argmax(std::span<const double> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

std::vector<double> SvmModel::predict_log_proba(const SparseVector& x) const {
  auto f = decision_values(x);
  for (std::size_t c = 0; c < f.size(); ++c) {
    f[c] = log_sigmoid(binaries_[c].platt.a * f[c] + binaries_[c].platt.b);
  }
  return normalize_log(std::move(f));
}

Emotion SvmModel::predict(const SparseVector& x) const {
  return classes_[argmax(predict_log_proba(x))];
}

nlohmann::json SvmModel::to_json() const {
  nlohmann::json cfg = {{"C", config_.C},
                        {"gamma", *config_.gamma},
                        {"tol", config_.tol},
                        {"max_passes", config_.max_passes},
                        {"cache_mb", config_.cache_mb},
                        {"platt_folds", config_.platt_folds},
                        {"seed", config_.seed},
                        {"calibration", "platt"}};
  nlohmann::json classes = nlohmann::json::array();
  for (auto c : classes_) classes.push_back(to_string(c));
  nlohmann::json binaries = nlohmann::json::array();
  for (const auto& b : binaries_) {
    nlohmann::json idx = nlohmann::json::array();
    nlohmann::json val = nlohmann::json::array();
    for (const auto& sv : b.support_vectors) {
      idx.push_back(sv.indices);
      val.push_back(sv.values);
    }
    binaries.push_back({{"bias", b.bias},
                        {"platt_a", b.platt.a},
                        {"platt_b", b.platt.b},
                        {"iterations", b.iterations},
                        {"alphas", b.alphas},
                        {"dual_coefs", b.dual_coefs},
                        {"sv_indices", std::move(idx)},
                        {"sv_values", std::move(val)}});
  }
  return {{"version", kFormatVersion},
          {"kernel", "rbf"},
          {"dimension", dimension_},
          {"config", std::move(cfg)},
          {"classes", std::move(classes)},
          {"binaries", std::move(binaries)}};
}

SvmModel SvmModel::from_json(const nlohmann::json& j) {
  if (j.at("version").get<int>() != kFormatVersion) {
    throw ParseError("unsupported SVM model version " + j.at("version").dump());
  }
  SvmModel m;
  m.dimension_ = j.at("dimension").get<std::size_t>();
  const auto& cfg = j.at("config");
  m.config_.C = cfg.at("C").get<double>();
  m.config_.gamma = cfg.at("gamma").get<double>();
  m.config_.tol = cfg.at("tol").get<double>();
  m.config_.max_passes = cfg.at("max_passes").get<std::size_t>();
  m.config_.cache_mb = cfg.at("cache_mb").get<std::size_t>();
  m.config_.platt_folds = cfg.at("platt_folds").get<std::size_t>();
  m.config_.seed = cfg.at("seed").get<std::uint64_t>();
  m.config_.validate();
  for (const auto& c : j.at("classes")) m.classes_.push_back(emotion_from_string(c.get<std::string>()));
  for (const auto& jb : j.at("binaries")) {
    BinarySvm b;
    b.bias = jb.at("bias").get<double>();
    b.platt = {jb.at("platt_a").get<double>(), jb.at("platt_b").get<double>()};
    b.iterations = jb.at("iterations").get<std::size_t>();
    b.alphas = jb.at("alphas").get<std::vector<double>>();
    b.dual_coefs = jb.at("dual_coefs").get<std::vector<double>>();
    const auto& idx = jb.at("sv_indices");
    const auto& val = jb.at("sv_values");
    if (idx.size() != val.size() || idx.size() != b.dual_coefs.size() || b.alphas.size() != b.dual_coefs.size()) {
      throw ParseError("SVM model: support vector arrays have mismatched lengths");
    }
    for (std::size_t i = 0; i < idx.size(); ++i) {
      b.support_vectors.push_back(sparse_from_json(
          {{"dim", m.dimension_}, {"idx", idx[i]}, {"val", val[i]}}));
    }
    m.binaries_.push_back(std::move(b));
  }
  if (m.binaries_.size() != m.classes_.size()) {
    throw ParseError("SVM model: one binary classifier per class is required");
  }
  return m;
}

}  // namespace tweetemo
