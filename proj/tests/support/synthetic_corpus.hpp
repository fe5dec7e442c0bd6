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
#include <cstdint>
#include <filesystem>
#include <string>

#include "tweetemo/labels.hpp"
#include "tweetemo/random.hpp"

// Deterministic stand-in for the WASSA-2017 and CrowdFlower files, used where
// the real corpora are not available. Tweets mix class-indicative words,
// shared filler, mentions, URLs, hashtags, emoji and emoticons; neutral tweets
// borrow emotional words often enough to be the hardest class.
namespace tweetemo::testing {

struct SyntheticCorpusOptions {
  std::uint64_t seed = 2017;
  // anger, fear, joy, sadness; the real WASSA totals.
  std::array<std::size_t, 4> wassa_counts = {1701, 2252, 1616, 1533};
  std::size_t neutral = 2000;
  std::size_t other_sentiments = 600;  // CSV rows that must be filtered out
  std::size_t duplicates_per_class = 25;
  // Probability that a tweet is drawn from another class's generator.
  double label_noise = 0.04;
};

struct SyntheticCorpusPaths {
  std::filesystem::path wassa_dir;
  std::filesystem::path neutral_csv;
};

// Writes <root>/wassa/*.txt and <root>/text_emotion.csv.
SyntheticCorpusPaths write_synthetic_corpus(const std::filesystem::path& root, const SyntheticCorpusOptions& options = {});

std::string synthetic_tweet(Emotion style, SplitMix64& rng);

}  // namespace tweetemo::testing
