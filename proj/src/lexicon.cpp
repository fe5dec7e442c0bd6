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

#include "tweetemo/lexicon.hpp"

#include <algorithm>

#include "tweetemo/checksum.hpp"
#include "tweetemo/error.hpp"
#include "tweetemo/resources.hpp"

namespace tweetemo {

namespace {

bool valid_phrase(std::string_view phrase) {
  if (phrase.empty() || phrase.front() == ' ' || phrase.back() == ' ') return false;
  char prev = 'x';
  for (char c : phrase) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || (c == ' ' && prev != ' ');
    if (!ok) return false;
    prev = c;
  }
  return true;
}

template <typename Fn>
void for_each_entry(std::string_view tsv, std::string_view what, Fn&& fn) {
  std::size_t line_no = 0;
  while (!tsv.empty()) {
    const auto nl = tsv.find('\n');
    std::string_view line = tsv.substr(0, nl);
    tsv = nl == std::string_view::npos ? std::string_view{} : tsv.substr(nl + 1);
    ++line_no;
    if (line.ends_with('\r')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    const std::string where = std::string(what) + " line " + std::to_string(line_no);
    if (tab == std::string_view::npos || tab == 0) {
      throw ParseError(where + ": expected key<TAB>phrase");
    }
    const auto key = line.substr(0, tab);
    const auto phrase = line.substr(tab + 1);
    if (!valid_phrase(phrase)) {
      throw ParseError(where + ": phrase '" + std::string(phrase) +
                       "' is not a lowercase ASCII word sequence");
    }
    fn(key, phrase, where);
  }
}

}  // namespace

void EmoticonLexicon::insert_emoji(std::string_view key, std::string phrase) {
  std::uint32_t node = 0;
  for (unsigned char byte : key) {
    auto& children = trie_[node].children;
    auto it = std::lower_bound(children.begin(), children.end(), byte,
                               [](const auto& child, std::uint8_t b) { return child.first < b; });
    if (it != children.end() && it->first == byte) {
      node = it->second;
    } else {
      const auto next = static_cast<std::uint32_t>(trie_.size());
      children.insert(it, {byte, next});
      trie_.emplace_back();
      node = next;
    }
  }
  auto& slot = trie_[node].phrase;
  if (slot >= 0) {
    if (emoji_phrases_[slot] != phrase) {
      throw ParseError("conflicting phrases for emoji key '" + std::string(key) + "'");
    }
    return;
  }
  slot = static_cast<std::int32_t>(emoji_phrases_.size());
  emoji_phrases_.push_back(std::move(phrase));
}

EmoticonLexicon EmoticonLexicon::parse(std::string_view unicode_tsv, std::string_view western_tsv) {
  EmoticonLexicon lex;
  for_each_entry(unicode_tsv, "emoji lexicon", [&](auto key, auto phrase, const auto&) {
    lex.insert_emoji(key, std::string(phrase));
  });
  for_each_entry(western_tsv, "emoticon lexicon", [&](auto key, auto phrase, const auto& where) {
    auto [it, inserted] = lex.emoticons_.emplace(std::string(key), std::string(phrase));
    if (!inserted && it->second != phrase) {
      throw ParseError(where + ": conflicting phrase for '" + std::string(key) + "'");
    }
  });
  for (const auto& [key, phrase] : lex.emoticons_) lex.emoticon_order_.push_back(key);
  std::sort(lex.emoticon_order_.begin(), lex.emoticon_order_.end(),
            [](const std::string& a, const std::string& b) {
              return a.size() != b.size() ? a.size() > b.size() : a < b;
            });
  return lex;
}

EmoticonLexicon EmoticonLexicon::load(const std::filesystem::path& unicode_tsv,
                                      const std::filesystem::path& western_tsv) {
  return parse(read_file(unicode_tsv), read_file(western_tsv));
}

const EmoticonLexicon& EmoticonLexicon::bundled() {
  static const EmoticonLexicon lex =
      parse(resources::emoji_lexicon_tsv(), resources::emoticon_lexicon_tsv());
  return lex;
}

std::size_t EmoticonLexicon::match_emoji(std::string_view text, std::size_t pos,
                                         std::string_view& phrase) const {
  std::uint32_t node = 0;
  std::size_t best = 0;
  for (std::size_t i = pos; i < text.size(); ++i) {
    const auto byte = static_cast<std::uint8_t>(text[i]);
    const auto& children = trie_[node].children;
    auto it = std::lower_bound(children.begin(), children.end(), byte,
                               [](const auto& child, std::uint8_t b) { return child.first < b; });
    if (it == children.end() || it->first != byte) break;
    node = it->second;
    if (trie_[node].phrase >= 0) {
      best = i + 1 - pos;
      phrase = emoji_phrases_[trie_[node].phrase];
    }
  }
  return best;
}

const std::string* EmoticonLexicon::find_emoticon(std::string_view token) const {
  auto it = emoticons_.find(std::string(token));
  return it == emoticons_.end() ? nullptr : &it->second;
}

StopwordSet parse_stopwords(std::string_view text) {
  StopwordSet words;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    words.emplace(line);
  }
  return words;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  return parse_stopwords(read_file(path));
}

const StopwordSet& bundled_stopwords() {
  static const StopwordSet words = parse_stopwords(resources::stopwords_txt());
  return words;
}

}  // namespace tweetemo
