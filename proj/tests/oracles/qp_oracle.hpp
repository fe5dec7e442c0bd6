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

// Reference solver for the C-SVM dual
//   max  sum(a) - 1/2 a^T Q a,  Q_ij = y_i y_j K_ij,  0 <= a <= C,  y^T a = 0
// on small dense problems. FISTA with adaptive restart; the projection onto
// the box-and-hyperplane set bisects on the multiplier. The result is then
// polished by solving the KKT system on the detected free set exactly.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

namespace tweetemo::oracle {

using Matrix = std::vector<std::vector<double>>;

struct QpSolution {
  std::vector<double> alpha;
  double objective = 0.0;
  double bias = 0.0;
};

inline Matrix rbf_gram(const Matrix& x, double gamma) {
  Matrix k(x.size(), std::vector<double>(x.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      double d = 0;
      for (std::size_t f = 0; f < x[i].size(); ++f) d += (x[i][f] - x[j][f]) * (x[i][f] - x[j][f]);
      k[i][j] = std::exp(-gamma * d);
    }
  }
  return k;
}

inline double dual_objective(const Matrix& k, const std::vector<int>& y, const std::vector<double>& a) {
  double lin = 0, quad = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    lin += a[i];
    for (std::size_t j = 0; j < a.size(); ++j) quad += a[i] * a[j] * y[i] * y[j] * k[i][j];
  }
  return lin - 0.5 * quad;
}

inline std::vector<double> project(const std::vector<double>& v, const std::vector<int>& y, double c) {
  auto at = [&](double lambda) {
    std::vector<double> a(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) a[i] = std::clamp(v[i] - lambda * y[i], 0.0, c);
    return a;
  };
  auto g = [&](double lambda) {
    const auto a = at(lambda);
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += y[i] * a[i];
    return s;
  };
  double hi = c + 1;
  for (double x : v) hi = std::max(hi, std::abs(x) + c + 1);
  double lo = -hi;
  for (int it = 0; it < 90; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0 ? lo : hi) = mid;
  }
  return at(0.5 * (lo + hi));
}

// Gaussian elimination with partial pivoting; nullopt when singular.
inline std::optional<std::vector<double>> solve_linear(Matrix a, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-13) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

// Solve for the free variables with the bounded ones fixed:
//   Q_FF a_F + y_F * mu = 1 - Q_FB a_B,   y_F^T a_F = -y_B^T a_B.
inline std::optional<std::vector<double>> polish(const Matrix& q, const std::vector<int>& y, double c,
                                                 const std::vector<double>& a) {
  const double eps = 1e-7 * c;
  std::vector<std::size_t> free;
  std::vector<double> fixed(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= eps) fixed[i] = 0.0;
    else if (a[i] >= c - eps) fixed[i] = c;
    else free.push_back(i);
  }
  if (free.empty()) return fixed;
  const std::size_t m = free.size();
  Matrix sys(m + 1, std::vector<double>(m + 1, 0.0));
  std::vector<double> rhs(m + 1, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t i = free[r];
    for (std::size_t s = 0; s < m; ++s) sys[r][s] = q[i][free[s]];
    sys[r][m] = y[i];
    sys[m][r] = y[i];
    rhs[r] = 1.0;
    for (std::size_t j = 0; j < a.size(); ++j) rhs[r] -= q[i][j] * fixed[j];
  }
  for (std::size_t j = 0; j < a.size(); ++j) rhs[m] -= y[j] * fixed[j];
  const auto sol = solve_linear(sys, rhs);
  if (!sol) return std::nullopt;
  std::vector<double> out = fixed;
  for (std::size_t r = 0; r < m; ++r) {
    if ((*sol)[r] < -1e-12 || (*sol)[r] > c + 1e-12) return std::nullopt;
    out[free[r]] = std::clamp((*sol)[r], 0.0, c);
  }
  return out;
}

inline QpSolution solve_dual_qp(const Matrix& k, const std::vector<int>& y, double c, int iterations = 20000) {
  const std::size_t n = y.size();
  Matrix q(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q[i][j] = y[i] * y[j] * k[i][j];
  }
  // Lipschitz constant: largest eigenvalue by power iteration, padded.
  std::vector<double> v(n, 1.0);
  double lmax = 1.0;
  for (int it = 0; it < 500; ++it) {
    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) w[i] += q[i][j] * v[j];
    }
    double norm = 0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (norm == 0) break;
    lmax = norm;
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  const double step = 1.0 / (1.05 * lmax);

  auto grad = [&](const std::vector<double>& a) {  // of the minimization form
    std::vector<double> g(n, -1.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) g[i] += q[i][j] * a[j];
    }
    return g;
  };

  std::vector<double> a(n, 0.0), z = a;
  double t = 1.0;
  double prev = dual_objective(k, y, a);
  for (int it = 0; it < iterations; ++it) {
    const auto g = grad(z);
    std::vector<double> target(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = z[i] - step * g[i];
    const auto next = project(target, y, c);
    const double obj = dual_objective(k, y, next);
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    if (obj < prev) {  // restart momentum
      t = 1.0;
      z = a;
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) z[i] = next[i] + ((t - 1.0) / t_next) * (next[i] - a[i]);
    a = next;
    t = t_next;
    prev = obj;
  }

  QpSolution out;
  out.alpha = a;
  out.objective = dual_objective(k, y, a);
  if (const auto p = polish(q, y, c, a)) {
    const double obj = dual_objective(k, y, *p);
    if (obj >= out.objective) {
      out.alpha = *p;
      out.objective = obj;
    }
  }

  // Bias: average over free vectors, else the midpoint of the feasible range.
  const double eps = 1e-7 * c;
  double sum = 0, ub = INFINITY, lb = -INFINITY;
  std::size_t n_free = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double f = 0;
    for (std::size_t j = 0; j < n; ++j) f += out.alpha[j] * y[j] * k[i][j];
    const double r = y[i] - f;
    if (out.alpha[i] > eps && out.alpha[i] < c - eps) {
      sum += r;
      ++n_free;
    } else if ((out.alpha[i] <= eps) == (y[i] > 0)) {
      lb = std::max(lb, r);  // y f(x) >= 1 pushes b up for positives at zero
    } else {
      ub = std::min(ub, r);
    }
  }
  if (n_free > 0) {
    out.bias = sum / static_cast<double>(n_free);
  } else if (std::isfinite(ub) && std::isfinite(lb)) {
    out.bias = 0.5 * (ub + lb);
  } else {
    out.bias = std::isfinite(ub) ? ub : lb;
  }
  return out;
}

}  // namespace tweetemo::oracle
