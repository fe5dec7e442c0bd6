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

#include "tweetemo/corpus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "json.hpp"

#include "tweetemo/checksum.hpp"
#include "tweetemo/error.hpp"
#include "tweetemo/random.hpp"

namespace tweetemo {

namespace fs = std::filesystem;

namespace {

std::string location(const fs::path& file, std::size_t line) {
  return file.string() + ":" + std::to_string(line);
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool is_numeric(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c >= '0' && c <= '9';
  });
}

std::string_view strip_bom(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  return text;
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  });
}

}  // namespace

std::vector<LabeledTweet> load_wassa_file(const fs::path& file) {
  const std::string content = read_file(file);
  std::string_view rest = strip_bom(content);
  std::vector<LabeledTweet> out;
  std::size_t line_no = 0;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty()) continue;

    const auto fields = split_tabs(line);
    if (fields.size() != 4) {
      throw ParseError(location(file, line_no) + ": expected 4 tab-separated fields (id, tweet, emotion, intensity), found " +
                       std::to_string(fields.size()));
    }
    if (line_no == 1 && !is_numeric(fields[0])) continue;  // header

    auto label = parse_emotion(fields[2]);
    if (!label || *label == Emotion::neutral) {
      throw ParseError(location(file, line_no) + ": unknown emotion '" + std::string(fields[2]) +
                       "' (expected anger, fear, joy or sadness)");
    }
    if (fields[0].empty()) throw ParseError(location(file, line_no) + ": empty id");
    if (blank(fields[1])) throw ParseError(location(file, line_no) + ": empty tweet text");
    out.push_back({std::string(fields[0]), std::string(fields[1]), *label});
  }
  return out;
}

std::vector<LabeledTweet> load_wassa(const fs::path& directory) {
  if (!fs::is_directory(directory)) {
    throw DataError("WASSA directory not found: " + directory.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(directory)) {
    const auto& p = entry.path();
    if (!entry.is_regular_file() || p.filename().string().starts_with('.')) continue;
    if (p.extension() == ".txt" || p.extension() == ".tsv") files.push_back(p);
  }
  std::sort(files.begin(), files.end());

  std::vector<LabeledTweet> out;
  std::map<std::string, std::size_t> seen;
  for (const auto& file : files) {
    for (auto& tweet : load_wassa_file(file)) {
      auto [it, inserted] = seen.emplace(tweet.id, out.size());
      if (!inserted) {
        if (out[it->second] == tweet) continue;
        throw DataError(file.string() + ": duplicate id '" + tweet.id + "' with different content");
      }
      out.push_back(std::move(tweet));
    }
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text,
                                                std::vector<std::size_t>* line_numbers) {
  text = strip_bom(text);
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    const bool empty_line = record.size() == 1 && record[0].empty();
    if (!empty_line) {
      records.push_back(std::move(record));
      if (line_numbers) line_numbers->push_back(record_line);
    }
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started && field.empty()) {
          in_quotes = true;
          field_started = true;
        } else {
          field.push_back(c);  // stray quote inside an unquoted field
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_record();
        ++line;
        record_line = line;
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) {
    throw ParseError("line " + std::to_string(record_line) + ": unterminated quoted field");
  }
  if (!field.empty() || field_started || !record.empty()) end_record();
  return records;
}

std::vector<LabeledTweet> load_neutral(const fs::path& csv_path, const NeutralCsvOptions& options) {
  if (!fs::is_regular_file(csv_path)) {
    throw DataError("neutral CSV not found: " + csv_path.string());
  }
  std::vector<std::size_t> lines;
  std::vector<std::vector<std::string>> rows;
  try {
    rows = parse_csv(read_file(csv_path), &lines);
  } catch (const ParseError& e) {
    throw ParseError(csv_path.string() + ": " + e.what());
  }
  if (rows.empty()) return {};

  const auto& header = rows.front();
  auto column = [&](const std::string& name) -> std::ptrdiff_t {
    auto it = std::find(header.begin(), header.end(), name);
    return it == header.end() ? -1 : it - header.begin();
  };
  const auto text_col = column(options.text_column);
  const auto label_col = column(options.label_column);
  const auto id_col = column(options.id_column);
  if (text_col < 0 || label_col < 0) {
    std::string msg = csv_path.string() + ": missing column(s)";
    if (text_col < 0) msg += " '" + options.text_column + "'";
    if (label_col < 0) msg += " '" + options.label_column + "'";
    msg += "; available headers:";
    for (std::size_t i = 0; i < header.size(); ++i) msg += (i ? ", " : " ") + header[i];
    throw DataError(msg);
  }

  std::vector<LabeledTweet> out;
  std::unordered_set<std::string> ids;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) {
      throw ParseError(location(csv_path, lines[r]) + ": expected " + std::to_string(header.size()) +
                       " fields, found " + std::to_string(row.size()));
    }
    if (row[label_col] != options.neutral_tag) continue;
    if (blank(row[text_col])) throw ParseError(location(csv_path, lines[r]) + ": empty tweet text");
    std::string id = id_col >= 0 ? row[id_col] : "neutral-" + std::to_string(r);
    if (id.empty()) throw ParseError(location(csv_path, lines[r]) + ": empty id");
    if (!ids.insert(id).second) {
      throw DataError(location(csv_path, lines[r]) + ": duplicate id '" + id + "'");
    }
    out.push_back({std::move(id), row[text_col], Emotion::neutral});
  }
  return out;
}

PartitionSizes partition_sizes(std::size_t per_class) {
  PartitionSizes s;
  s.validation = per_class / 10;
  s.test = per_class / 10;
  s.train = per_class - s.validation - s.test;
  return s;
}

DatasetSplit balance_and_split(std::span<const LabeledTweet> tweets, std::size_t per_class,
                               std::uint64_t seed, bool drop_neutral) {
  if (per_class == 0) throw DataError("per_class must be positive");

  DatasetSplit split;
  split.seed = seed;

  std::array<std::vector<const LabeledTweet*>, kNumEmotions> by_class;
  std::set<std::pair<std::string_view, Emotion>> seen_text;
  std::unordered_set<std::string_view> seen_ids;

  // Dedupe keeps the smallest id of each (text, label) group, so the result
  // does not depend on input order.
  std::vector<const LabeledTweet*> ordered;
  ordered.reserve(tweets.size());
  for (const auto& t : tweets) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(),
            [](const LabeledTweet* a, const LabeledTweet* b) { return a->id < b->id; });
  for (const auto* t : ordered) {
    if (!seen_ids.insert(t->id).second) {
      throw DataError("duplicate tweet id '" + t->id + "'");
    }
    if (!seen_text.emplace(t->text, t->label).second) {
      ++split.duplicates_dropped;
      continue;
    }
    if (drop_neutral && t->label == Emotion::neutral) continue;
    by_class[index_of(t->label)].push_back(t);
  }

  const auto sizes = partition_sizes(per_class);
  for (std::size_t k = 0; k < kNumEmotions; ++k) {
    auto& members = by_class[k];
    if (members.empty()) continue;
    const auto label = emotion_from_index(k);
    if (members.size() < per_class) {
      throw DataError("class '" + std::string(to_string(label)) + "' has " +
                      std::to_string(members.size()) + " tweets, fewer than per_class=" +
                      std::to_string(per_class));
    }
    split.classes.push_back(label);

    SplitMix64 rng(mix_seed(seed, k));
    shuffle(members, rng);
    std::size_t i = 0;
    for (; i < sizes.train; ++i) split.train.push_back(*members[i]);
    for (; i < sizes.train + sizes.validation; ++i) split.validation.push_back(*members[i]);
    for (; i < per_class; ++i) split.test.push_back(*members[i]);
  }
  if (split.classes.empty()) throw DataError("no tweets to split");
  return split;
}

std::string to_jsonl(std::span<const LabeledTweet> tweets) {
  std::string out;
  for (const auto& t : tweets) {
    nlohmann::ordered_json j;
    j["id"] = t.id;
    j["text"] = t.text;
    j["label"] = to_string(t.label);
    out += j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
    out += '\n';
  }
  return out;
}

std::vector<LabeledTweet> parse_jsonl(std::string_view text, std::string_view origin) {
  std::vector<LabeledTweet> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty()) continue;
    const std::string where = std::string(origin) + ":" + std::to_string(line_no);
    try {
      const auto j = nlohmann::json::parse(line);
      LabeledTweet t{j.at("id").get<std::string>(), j.at("text").get<std::string>(),
                     emotion_from_string(j.at("label").get<std::string>())};
      if (t.id.empty()) throw ParseError("empty id");
      out.push_back(std::move(t));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(where + ": " + e.what());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return out;
}

std::vector<LabeledTweet> read_jsonl(const fs::path& path) {
  if (!fs::is_regular_file(path)) throw DataError("split file not found: " + path.string());
  return parse_jsonl(read_file(path), path.string());
}

}  // namespace tweetemo
