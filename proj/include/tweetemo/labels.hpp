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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace tweetemo {

// Encoded in alphabetical order; the numeric value is the class index used
// in every vector and matrix of the library.
enum class Emotion : std::uint8_t {
  anger = 0,
  fear = 1,
  joy = 2,
  neutral = 3,
  sadness = 4,
};

inline constexpr std::size_t kNumEmotions = 5;

inline constexpr std::array<Emotion, kNumEmotions> kAllEmotions = {
    Emotion::anger, Emotion::fear, Emotion::joy, Emotion::neutral,
    Emotion::sadness};

constexpr std::size_t index_of(Emotion e) noexcept {
  return static_cast<std::size_t>(e);
}

std::string_view to_string(Emotion e) noexcept;

// Exact lowercase match; nullopt for anything else.
std::optional<Emotion> parse_emotion(std::string_view name) noexcept;

// Throws ParseError naming the offending string.
Emotion emotion_from_string(std::string_view name);

// Throws std::out_of_range for indices >= kNumEmotions.
Emotion emotion_from_index(std::size_t index);

// Sorted by encoding, duplicates removed.
std::vector<Emotion> normalized_classes(std::vector<Emotion> classes);

}  // namespace tweetemo
