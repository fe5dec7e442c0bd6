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
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tweetemo {

// Emoji and western-emoticon tables. Immutable after construction; every
// phrase is a lowercase ASCII word sequence.
class EmoticonLexicon {
 public:
  // Both arguments are TSV text: key<TAB>phrase per line, '#' comments.
  static EmoticonLexicon parse(std::string_view unicode_tsv, std::string_view western_tsv);
  static EmoticonLexicon load(const std::filesystem::path& unicode_tsv,
                              const std::filesystem::path& western_tsv);
  // Built from data/emoji_lexicon.tsv and data/emoticon_lexicon.tsv.
  static const EmoticonLexicon& bundled();

  // Length in bytes of the longest emoji key starting at text[pos], or 0.
  // On a match `phrase` is set to the key's phrase.
  std::size_t match_emoji(std::string_view text, std::size_t pos, std::string_view& phrase) const;

  // Exact western-emoticon lookup.
  const std::string* find_emoticon(std::string_view token) const;

  // Western keys sorted by decreasing length (ties by key).
  const std::vector<std::string>& emoticons_longest_first() const { return emoticon_order_; }

  std::size_t emoji_count() const { return emoji_phrases_.size(); }
  std::size_t emoticon_count() const { return emoticons_.size(); }

 private:
  struct Node {
    std::vector<std::pair<std::uint8_t, std::uint32_t>> children;  // sorted by byte
    std::int32_t phrase = -1;
  };

  void insert_emoji(std::string_view key, std::string phrase);

  std::vector<Node> trie_{Node{}};
  std::vector<std::string> emoji_phrases_;
  std::unordered_map<std::string, std::string> emoticons_;
  std::vector<std::string> emoticon_order_;
};

using StopwordSet = std::unordered_set<std::string>;

// One word per line; blank lines and '#' comments ignored.
StopwordSet parse_stopwords(std::string_view text);
StopwordSet load_stopwords(const std::filesystem::path& path);
// The vendored English list (179 words).
const StopwordSet& bundled_stopwords();

}  // namespace tweetemo
