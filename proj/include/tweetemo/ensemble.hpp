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

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tweetemo/labels.hpp"

namespace tweetemo {

// Entries may exceed zero by this much before a record is rejected.
inline constexpr double kLogProbSignTolerance = 1e-9;
// Allowed |logsumexp| of a record.
inline constexpr double kLogProbNormTolerance = 1e-6;

// One model's per-class log-probabilities for one tweet. `logprobs[i]`
// belongs to `classes[i]`; classes are either all five labels or the four
// without neutral, always in encoding order.
struct LogProbRecord {
  std::string id;
  std::optional<Emotion> gold;
  std::string source;
  std::vector<Emotion> classes;
  std::vector<double> logprobs;

  friend bool operator==(const LogProbRecord&, const LogProbRecord&) = default;
};

// Single JSONL line without the trailing newline:
//   {"id":..,"gold":..|null,"source":..,"logprobs":{"anger":..,...}}
std::string format_record(const LogProbRecord& record);
std::string format_stream(std::span<const LogProbRecord> records);

// Shape checks only (JSON structure, label names, key set).
LogProbRecord parse_record(std::string_view line);

// Throws DataError naming the id and the offending value when an entry is
// non-finite or positive beyond tolerance, or the vector is not normalized.
void validate_record(const LogProbRecord& record);

// Parses and validates every line (blank lines are skipped). Errors carry
// `origin` and the line number. Duplicate ids are rejected.
std::vector<LogProbRecord> parse_stream(std::string_view text, std::string_view origin = "<memory>");
std::vector<LogProbRecord> validate_stream(const std::filesystem::path& path);

struct FusedRecord {
  std::string id;
  std::optional<Emotion> gold;
  std::vector<double> scores;  // raw sums, not renormalized
  Emotion predicted{};
};

struct Fusion {
  std::vector<Emotion> classes;
  std::vector<std::string> sources;  // in summation order
  std::vector<FusedRecord> records;  // sorted by id
};

// Elementwise sum of the streams' vectors per id, then argmax with ties to
// the lowest class index. Streams are summed left to right in order of their
// source names (stable for equal names), so input order never changes the
// bits. A single stream fuses to itself.
//
// Throws DataError when the streams cover different id sets (naming the
// first missing id), disagree on the class key set, a stream mixes source
// names or repeats an id, or two streams give conflicting gold labels.
Fusion fuse(std::span<const std::vector<LogProbRecord>> streams);

}  // namespace tweetemo
