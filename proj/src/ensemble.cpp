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

#include "tweetemo/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "tweetemo/checksum.hpp"
#include "tweetemo/error.hpp"
#include "tweetemo/svm.hpp"

namespace tweetemo {

namespace {

using ordered = nlohmann::ordered_json;

std::string format_double(double v) {
  return nlohmann::json(v).dump();
}

bool valid_class_set(const std::vector<Emotion>& classes) {
  if (classes.size() == kNumEmotions) return true;
  if (classes.size() != kNumEmotions - 1) return false;
  return std::find(classes.begin(), classes.end(), Emotion::neutral) == classes.end();
}

std::string class_list(const std::vector<Emotion>& classes) {
  std::string out;
  for (auto c : classes) {
    if (!out.empty()) out += ",";
    out += to_string(c);
  }
  return out;
}

}  // namespace

std::string format_record(const LogProbRecord& record) {
  if (record.logprobs.size() != record.classes.size()) {
    throw DataError("record '" + record.id + "': class and value counts differ");
  }
  ordered j;
  j["id"] = record.id;
  j["gold"] = record.gold ? ordered(std::string(to_string(*record.gold))) : ordered(nullptr);
  j["source"] = record.source;
  ordered lp = ordered::object();
  for (std::size_t i = 0; i < record.classes.size(); ++i) {
    if (!std::isfinite(record.logprobs[i])) {
      throw DataError("record '" + record.id + "': non-finite log-probability for " +
                      std::string(to_string(record.classes[i])));
    }
    lp[std::string(to_string(record.classes[i]))] = record.logprobs[i];
  }
  j["logprobs"] = std::move(lp);
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::strict);
}

std::string format_stream(std::span<const LogProbRecord> records) {
  std::string out;
  for (const auto& r : records) {
    out += format_record(r);
    out += '\n';
  }
  return out;
}

LogProbRecord parse_record(std::string_view line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw ParseError("record is not a JSON object");
  LogProbRecord r;
  const auto id = j.find("id");
  if (id == j.end() || !id->is_string() || id->get<std::string>().empty()) {
    throw ParseError("record lacks a non-empty string 'id'");
  }
  r.id = id->get<std::string>();
  const auto gold = j.find("gold");
  if (gold != j.end() && !gold->is_null()) {
    if (!gold->is_string()) throw ParseError("record '" + r.id + "': 'gold' must be a label or null");
    r.gold = emotion_from_string(gold->get<std::string>());
  }
  const auto source = j.find("source");
  if (source == j.end() || !source->is_string()) throw ParseError("record '" + r.id + "': missing 'source'");
  r.source = source->get<std::string>();
  const auto lp = j.find("logprobs");
  if (lp == j.end() || !lp->is_object()) throw ParseError("record '" + r.id + "': missing 'logprobs' object");
  // nlohmann::json objects iterate in key order, which is the encoding order.
  for (const auto& [key, value] : lp->items()) {
    const auto label = parse_emotion(key);
    if (!label) throw ParseError("record '" + r.id + "': unknown class '" + key + "'");
    if (!value.is_number()) throw ParseError("record '" + r.id + "': value for '" + key + "' is not a number");
    r.classes.push_back(*label);
    r.logprobs.push_back(value.get<double>());
  }
  if (!valid_class_set(r.classes)) {
    throw ParseError("record '" + r.id + "': class keys must be all five labels or the four without neutral, got " +
                     class_list(r.classes));
  }
  if (r.gold && std::find(r.classes.begin(), r.classes.end(), *r.gold) == r.classes.end()) {
    throw ParseError("record '" + r.id + "': gold label '" + std::string(to_string(*r.gold)) +
                     "' is not among its classes");
  }
  return r;
}

void validate_record(const LogProbRecord& record) {
  for (std::size_t i = 0; i < record.logprobs.size(); ++i) {
    const double v = record.logprobs[i];
    if (!std::isfinite(v) || v > kLogProbSignTolerance) {
      throw DataError("record '" + record.id + "': log-probability for " +
                      std::string(to_string(record.classes[i])) + " is " + format_double(v) +
                      " (must be finite and <= 0)");
    }
  }
  const double lse = logsumexp(record.logprobs);
  if (!(std::abs(lse) <= kLogProbNormTolerance)) {
    throw DataError("record '" + record.id + "': logsumexp is " + format_double(lse) +
                    " (probabilities do not sum to 1)");
  }
}

std::vector<LogProbRecord> parse_stream(std::string_view text, std::string_view origin) {
  std::vector<LogProbRecord> out;
  std::map<std::string, std::size_t, std::less<>> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::string where = std::string(origin) + ":" + std::to_string(lineno) + ": ";
    try {
      auto r = parse_record(line);
      validate_record(r);
      if (!seen.emplace(r.id, lineno).second) throw DataError("duplicate id '" + r.id + "'");
      out.push_back(std::move(r));
    } catch (const ParseError& ex) {
      throw ParseError(where + ex.what());
    } catch (const DataError& ex) {
      throw DataError(where + ex.what());
    }
  }
  return out;
}

std::vector<LogProbRecord> validate_stream(const std::filesystem::path& path) {
  return parse_stream(read_file(path), path.string());
}

Fusion fuse(std::span<const std::vector<LogProbRecord>> streams) {
  if (streams.empty()) throw DataError("fusion needs at least one stream");
  for (std::size_t s = 0; s < streams.size(); ++s) {
    if (streams[s].empty()) throw DataError("stream " + std::to_string(s + 1) + " is empty");
  }

  std::vector<std::size_t> order(streams.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return streams[a].front().source < streams[b].front().source;
  });

  Fusion out;
  out.classes = streams[order.front()].front().classes;

  // Per stream: id -> record.
  std::vector<std::map<std::string_view, const LogProbRecord*>> index(streams.size());
  for (std::size_t s : order) {
    const auto& stream = streams[s];
    const std::string& source = stream.front().source;
    out.sources.push_back(source);
    for (const auto& r : stream) {
      if (r.source != source) {
        throw DataError("stream '" + source + "' mixes source names (record '" + r.id + "' says '" + r.source + "')");
      }
      if (r.classes != out.classes) {
        throw DataError("record '" + r.id + "' in stream '" + source + "' has classes [" + class_list(r.classes) +
                        "], expected [" + class_list(out.classes) + "]");
      }
      if (r.logprobs.size() != r.classes.size()) {
        throw DataError("record '" + r.id + "' in stream '" + source + "' has a dimension mismatch");
      }
      if (!index[s].emplace(r.id, &r).second) {
        throw DataError("stream '" + source + "' repeats id '" + r.id + "'");
      }
    }
  }

  const auto& reference = index[order.front()];
  for (std::size_t k = 1; k < order.size(); ++k) {
    const auto& other = index[order[k]];
    const std::string& ref_name = streams[order.front()].front().source;
    const std::string& other_name = streams[order[k]].front().source;
    for (const auto& [id, rec] : reference) {
      if (!other.contains(id)) {
        throw DataError("id '" + std::string(id) + "' from stream '" + ref_name + "' is missing from stream '" +
                        other_name + "'");
      }
    }
    for (const auto& [id, rec] : other) {
      if (!reference.contains(id)) {
        throw DataError("id '" + std::string(id) + "' from stream '" + other_name + "' is missing from stream '" +
                        ref_name + "'");
      }
    }
  }

  out.records.reserve(reference.size());
  for (const auto& [id, first] : reference) {
    FusedRecord fr;
    fr.id = std::string(id);
    fr.scores = first->logprobs;
    fr.gold = first->gold;
    for (std::size_t k = 1; k < order.size(); ++k) {
      const LogProbRecord* r = index[order[k]].at(id);
      for (std::size_t c = 0; c < fr.scores.size(); ++c) fr.scores[c] += r->logprobs[c];
      if (r->gold) {
        if (fr.gold && *fr.gold != *r->gold) {
          throw DataError("id '" + fr.id + "' has conflicting gold labels " + std::string(to_string(*fr.gold)) +
                          " and " + std::string(to_string(*r->gold)));
        }
        fr.gold = r->gold;
      }
    }
    fr.predicted = out.classes[argmax(fr.scores)];
    out.records.push_back(std::move(fr));
  }
  return out;
}

}  // namespace tweetemo
