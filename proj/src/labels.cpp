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

#include "tweetemo/labels.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tweetemo/error.hpp"

namespace tweetemo {

namespace {
constexpr std::array<std::string_view, kNumEmotions> kNames = {
    "anger", "fear", "joy", "neutral", "sadness"};
}  // namespace

std::string_view to_string(Emotion e) noexcept { return kNames[index_of(e)]; }

std::optional<Emotion> parse_emotion(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<Emotion>(i);
  }
  return std::nullopt;
}

Emotion emotion_from_string(std::string_view name) {
  if (auto e = parse_emotion(name)) return *e;
  throw ParseError("unknown emotion label '" + std::string(name) + "'");
}

Emotion emotion_from_index(std::size_t index) {
  if (index >= kNumEmotions) {
    throw std::out_of_range("emotion index " + std::to_string(index) +
                            " out of range");
  }
  return static_cast<Emotion>(index);
}

std::vector<Emotion> normalized_classes(std::vector<Emotion> classes) {
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  return classes;
}

}  // namespace tweetemo
