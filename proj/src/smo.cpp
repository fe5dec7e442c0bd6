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

#include "tweetemo/smo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "tweetemo/error.hpp"

namespace tweetemo {

double rbf_kernel(const SparseVector& x, const SparseVector& y, double gamma) noexcept {
  return std::exp(-gamma * squared_distance(x, y));
}

KernelCache::KernelCache(std::size_t n, std::size_t budget_bytes, RowFn fill)
    : n_(n),
      capacity_(std::clamp<std::size_t>(budget_bytes / std::max<std::size_t>(1, n * sizeof(double)), 2,
                                        std::max<std::size_t>(n, 2))),
      fill_(std::move(fill)),
      slot_of_(n, -1),
      lru_pos_(n) {
  slots_.reserve(capacity_);
  row_in_slot_.reserve(capacity_);
}

std::span<const double> KernelCache::row(std::size_t i) {
  if (slot_of_[i] >= 0) {
    ++hits_;
    lru_.splice(lru_.begin(), lru_, lru_pos_[i]);
    return slots_[static_cast<std::size_t>(slot_of_[i])];
  }
  ++misses_;
  std::size_t slot;
  if (slots_.size() < capacity_) {
    slot = slots_.size();
    slots_.emplace_back(n_);
    row_in_slot_.push_back(i);
  } else {
    const std::size_t victim = lru_.back();
    lru_.pop_back();
    slot = static_cast<std::size_t>(slot_of_[victim]);
    slot_of_[victim] = -1;
    row_in_slot_[slot] = i;
  }
  fill_(i, slots_[slot]);
  slot_of_[i] = static_cast<std::ptrdiff_t>(slot);
  lru_.push_front(i);
  lru_pos_[i] = lru_.begin();
  return slots_[slot];
}

namespace {

constexpr double kTau = 1e-12;

}  // namespace

SmoSolution solve_smo(std::span<const SparseVector> x, std::span<const int> y, const SmoOptions& options) {
  const std::size_t n = x.size();
  if (n == 0 || y.size() != n) throw TrainingError("SMO: empty problem or label count mismatch");
  const double C = options.C;

  // Kernel rows; Q_ij = y_i y_j K_ij is applied at use.
  KernelCache cache(n, options.cache_bytes, [&](std::size_t i, std::span<double> out) {
    for (std::size_t t = 0; t < n; ++t) out[t] = rbf_kernel(x[i], x[t], options.gamma);
  });
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = rbf_kernel(x[i], x[i], options.gamma);

  std::vector<double> alpha(n, 0.0);
  std::vector<double> grad(n, -1.0);  // gradient of 1/2 a'Qa - e'a

  auto in_up = [&](std::size_t t) { return y[t] > 0 ? alpha[t] < C : alpha[t] > 0.0; };
  auto in_low = [&](std::size_t t) { return y[t] > 0 ? alpha[t] > 0.0 : alpha[t] < C; };

  const std::size_t max_iter = std::max<std::size_t>(options.max_passes, 1) * std::max<std::size_t>(n, 1);
  std::size_t iter = 0;
  double violation = 0.0;
  while (true) {
    std::ptrdiff_t i = -1, j = -1;
    double g_max = -std::numeric_limits<double>::infinity();
    double g_min = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < n; ++t) {
      const double v = -y[t] * grad[t];
      if (in_up(t) && v > g_max) {
        g_max = v;
        i = static_cast<std::ptrdiff_t>(t);
      }
      if (in_low(t) && v < g_min) {
        g_min = v;
        j = static_cast<std::ptrdiff_t>(t);
      }
    }
    violation = (i < 0 || j < 0) ? 0.0 : g_max - g_min;
    if (violation < options.tol) break;
    if (iter >= max_iter) {
      std::ostringstream msg;
      msg << "SMO did not converge after " << iter << " iterations; maximal KKT violation "
          << violation << " (tol " << options.tol << ")";
      throw TrainingError(msg.str());
    }
    ++iter;

    const auto ui = static_cast<std::size_t>(i);
    const auto uj = static_cast<std::size_t>(j);
    const auto k_i = cache.row(ui);
    const auto k_j = cache.row(uj);
    const double yi = y[ui], yj = y[uj];
    const double old_ai = alpha[ui], old_aj = alpha[uj];
    double& ai = alpha[ui];
    double& aj = alpha[uj];

    if (yi != yj) {
      double quad = diag[ui] + diag[uj] - 2.0 * k_i[uj];
      if (quad <= 0.0) quad = kTau;
      const double delta = (-grad[ui] - grad[uj]) / quad;
      const double diff = ai - aj;
      ai += delta;
      aj += delta;
      if (diff > 0.0) {
        if (aj < 0.0) { aj = 0.0; ai = diff; }
      } else {
        if (ai < 0.0) { ai = 0.0; aj = -diff; }
      }
      if (diff > 0.0) {
        if (ai > C) { ai = C; aj = C - diff; }
      } else {
        if (aj > C) { aj = C; ai = C + diff; }
      }
    } else {
      double quad = diag[ui] + diag[uj] - 2.0 * k_i[uj];
      if (quad <= 0.0) quad = kTau;
      const double delta = (grad[ui] - grad[uj]) / quad;
      const double sum = ai + aj;
      ai -= delta;
      aj += delta;
      if (sum > C) {
        if (ai > C) { ai = C; aj = sum - C; }
      } else {
        if (aj < 0.0) { aj = 0.0; ai = sum; }
      }
      if (sum > C) {
        if (aj > C) { aj = C; ai = sum - C; }
      } else {
        if (ai < 0.0) { ai = 0.0; aj = sum; }
      }
    }

    const double d_i = (ai - old_ai) * yi;
    const double d_j = (aj - old_aj) * yj;
    for (std::size_t t = 0; t < n; ++t) {
      grad[t] += y[t] * (k_i[t] * d_i + k_j[t] * d_j);
    }
  }

  // Bias from free variables, else the midpoint of the feasible interval.
  double ub = std::numeric_limits<double>::infinity();
  double lb = -std::numeric_limits<double>::infinity();
  double sum_free = 0.0;
  std::size_t n_free = 0;
  for (std::size_t t = 0; t < n; ++t) {
    const double yg = y[t] * grad[t];
    if (alpha[t] >= C) {
      if (y[t] < 0) ub = std::min(ub, yg); else lb = std::max(lb, yg);
    } else if (alpha[t] <= 0.0) {
      if (y[t] > 0) ub = std::min(ub, yg); else lb = std::max(lb, yg);
    } else {
      ++n_free;
      sum_free += yg;
    }
  }
  double rho;
  if (n_free > 0) {
    rho = sum_free / static_cast<double>(n_free);
  } else if (std::isfinite(ub) && std::isfinite(lb)) {
    rho = (ub + lb) / 2.0;
  } else {
    rho = std::isfinite(ub) ? ub : (std::isfinite(lb) ? lb : 0.0);
  }

  SmoSolution sol;
  double half_quad_minus_sum = 0.0;
  for (std::size_t t = 0; t < n; ++t) half_quad_minus_sum += alpha[t] * (grad[t] - 1.0) / 2.0;
  sol.objective = -half_quad_minus_sum;
  sol.alpha = std::move(alpha);
  sol.bias = -rho;
  sol.iterations = iter;
  sol.violation = violation;
  return sol;
}

}  // namespace tweetemo
