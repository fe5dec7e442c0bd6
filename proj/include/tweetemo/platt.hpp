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

namespace tweetemo {

// P(y = +1 | f) = sigmoid(a * f + b)
struct PlattParams {
  double a = 0.0;
  double b = 0.0;
};

// Maximum-likelihood sigmoid fit with Platt's smoothed targets
// ((N+ + 1) / (N+ + 2) and 1 / (N- + 2)), solved by Newton's method with
// backtracking line search. Labels are +1 / -1.
PlattParams fit_platt(std::span<const double> decision_values, std::span<const int> labels);

// log(sigmoid(z)) without overflow or underflow to -inf for moderate z.
double log_sigmoid(double z) noexcept;

}  // namespace tweetemo
