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
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tweetemo/labels.hpp"

namespace tweetemo {

struct LabeledTweet {
  std::string id;
  std::string text;
  Emotion label{};

  friend bool operator==(const LabeledTweet&, const LabeledTweet&) = default;
};

struct DatasetSplit {
  std::vector<LabeledTweet> train;
  std::vector<LabeledTweet> validation;
  std::vector<LabeledTweet> test;
  std::uint64_t seed = 0;
  // Retained classes, in encoding order.
  std::vector<Emotion> classes;
  // Identical (text, label) pairs removed before sampling.
  std::size_t duplicates_dropped = 0;
};

// Reads every *.txt / *.tsv file in `directory` (sorted by file name) as
// WASSA rows: id, tweet, emotion, intensity. The intensity column is parsed
// for arity only and discarded. A first line whose id field is not numeric is
// treated as a header.
std::vector<LabeledTweet> load_wassa(const std::filesystem::path& directory);

// Same row format for a single file.
std::vector<LabeledTweet> load_wassa_file(const std::filesystem::path& file);

struct NeutralCsvOptions {
  std::string text_column = "content";
  std::string label_column = "sentiment";
  std::string neutral_tag = "neutral";
  // Optional; rows get "neutral-<row>" ids when the column is absent.
  std::string id_column = "tweet_id";
};

// RFC 4180 CSV with a header row. Keeps rows whose label column equals the
// neutral tag and relabels them neutral.
std::vector<LabeledTweet> load_neutral(const std::filesystem::path& csv_path,
                                       const NeutralCsvOptions& options = {});

// Parses RFC 4180 text into records. `line_numbers`, when given, receives the
// physical line on which each record starts.
std::vector<std::vector<std::string>> parse_csv(std::string_view text,
                                                std::vector<std::size_t>* line_numbers = nullptr);

struct PartitionSizes {
  std::size_t train = 0;
  std::size_t validation = 0;
  std::size_t test = 0;
};

// 80/10/10 with floor rounding on validation and test; the remainder goes to
// train. per_class = 1500 gives 1200/150/150.
PartitionSizes partition_sizes(std::size_t per_class);

// Dedupes identical (text, label) pairs, then for each retained class sorts by
// id, shuffles with a class-specific SplitMix64 stream derived from `seed`,
// keeps the first `per_class` tweets and cuts them into train/validation/test.
// Throws DataError when a retained class has fewer than per_class tweets.
DatasetSplit balance_and_split(std::span<const LabeledTweet> tweets, std::size_t per_class,
                               std::uint64_t seed, bool drop_neutral);

// JSON Lines, one {"id", "text", "label"} object per line.
std::string to_jsonl(std::span<const LabeledTweet> tweets);
std::vector<LabeledTweet> parse_jsonl(std::string_view text, std::string_view origin = "<memory>");
std::vector<LabeledTweet> read_jsonl(const std::filesystem::path& path);

}  // namespace tweetemo
