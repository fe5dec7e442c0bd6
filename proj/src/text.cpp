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

#include "tweetemo/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "tweetemo/error.hpp"
#include "tweetemo/stemmer.hpp"

namespace tweetemo {

namespace {

constexpr bool is_ascii_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

constexpr bool is_word_char(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

constexpr bool is_alnum(char c) noexcept { return is_word_char(c) && c != '_'; }

constexpr char lower(char c) noexcept { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

bool starts_with_ci(std::string_view text, std::size_t pos, std::string_view prefix) {
  if (text.size() - pos < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (lower(text[pos + i]) != prefix[i]) return false;
  }
  return true;
}

constexpr bool is_trailing_punct(char c) noexcept {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':':
    case ')': case ']': case '}': case '\'': case '"':
      return true;
    default:
      return false;
  }
}

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_ascii_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

// Decodes one UTF-8 sequence at text[pos]; returns its length (>= 1) and the
// code point, or U+FFFD for malformed input.
std::size_t decode_utf8(std::string_view text, std::size_t pos, char32_t& cp) {
  const auto b0 = static_cast<unsigned char>(text[pos]);
  std::size_t len;
  if (b0 < 0x80) { cp = b0; return 1; }
  if ((b0 & 0xE0) == 0xC0) { len = 2; cp = b0 & 0x1F; }
  else if ((b0 & 0xF0) == 0xE0) { len = 3; cp = b0 & 0x0F; }
  else if ((b0 & 0xF8) == 0xF0) { len = 4; cp = b0 & 0x07; }
  else { cp = 0xFFFD; return 1; }
  if (pos + len > text.size()) { cp = 0xFFFD; return 1; }
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(text[pos + i]);
    if ((b & 0xC0) != 0x80) { cp = 0xFFFD; return 1; }
    cp = (cp << 6) | (b & 0x3F);
  }
  return len;
}

// Pictographs, symbols and emoji-sequence glue (ZWJ, variation selectors,
// keycap, tags, regional indicators, skin tones).
constexpr bool is_emoji_like(char32_t cp) noexcept {
  return (cp >= 0x1F000 && cp <= 0x1FAFF) || (cp >= 0x2600 && cp <= 0x27BF) ||
         (cp >= 0x2300 && cp <= 0x23FF) || (cp >= 0x2B00 && cp <= 0x2BFF) ||
         (cp >= 0xFE00 && cp <= 0xFE0F) || cp == 0x200D || cp == 0x20E3 ||
         (cp >= 0xE0020 && cp <= 0xE007F);
}

std::string replace_emoticons(std::string_view text, const EmoticonLexicon& lexicon) {
  std::string out;
  out.reserve(text.size() + 16);
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_ascii_space(text[i])) {
      out.push_back(' ');
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !is_ascii_space(text[end])) ++end;
    const auto token = text.substr(i, end - i);
    i = end;

    if (const auto* phrase = lexicon.find_emoticon(token)) {
      out.append(*phrase);
      continue;
    }
    bool replaced = false;
    for (const auto& key : lexicon.emoticons_longest_first()) {
      if (key.size() >= token.size() || !token.ends_with(key)) continue;
      if (is_alnum(key.front())) continue;
      const char before = token[token.size() - key.size() - 1];
      if (!is_alnum(before)) continue;
      out.append(token.substr(0, token.size() - key.size()));
      out.push_back(' ');
      out.append(*lexicon.find_emoticon(key));
      replaced = true;
      break;
    }
    if (!replaced) out.append(token);
  }
  return out;
}

}  // namespace

std::string strip_artifacts(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    const bool boundary = i == 0 || !is_word_char(text[i - 1]);
    if (boundary && (starts_with_ci(text, i, "http://") || starts_with_ci(text, i, "https://") ||
                     starts_with_ci(text, i, "www."))) {
      std::size_t end = i;
      while (end < text.size() && !is_ascii_space(text[end])) ++end;
      std::size_t keep_from = end;
      const std::size_t prefix = starts_with_ci(text, i, "www.") ? 4 : (lower(text[i + 4]) == 's' ? 8 : 7);
      while (keep_from > i + prefix && is_trailing_punct(text[keep_from - 1])) --keep_from;
      out.push_back(' ');
      out.append(text.substr(keep_from, end - keep_from));
      i = end;
      continue;
    }
    if (c == '@' && i + 1 < text.size() && is_word_char(text[i + 1])) {
      std::size_t end = i + 1;
      while (end < text.size() && is_word_char(text[end])) ++end;
      out.push_back(' ');
      i = end;
      continue;
    }
    if (c != '#') out.push_back(c);
    ++i;
  }
  return collapse_whitespace(out);
}

std::string demojize(std::string_view text, const EmoticonLexicon& lexicon) {
  std::string out;
  out.reserve(text.size() + 32);
  std::size_t i = 0;
  while (i < text.size()) {
    std::string_view phrase;
    if (const auto n = lexicon.match_emoji(text, i, phrase); n > 0) {
      out.push_back(' ');
      out.append(phrase);
      out.push_back(' ');
      i += n;
      continue;
    }
    char32_t cp;
    const auto len = decode_utf8(text, i, cp);
    if (is_emoji_like(cp)) {
      out.push_back(' ');
    } else {
      out.append(text.substr(i, len));
    }
    i += len;
  }
  return collapse_whitespace(replace_emoticons(out, lexicon));
}

std::string fold_ascii(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfkd = icu::Normalizer2::getNFKDInstance(status);
  if (U_FAILURE(status)) throw Error(std::string("ICU NFKD unavailable: ") + u_errorName(status));

  const auto source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<std::int32_t>(text.size())));
  const icu::UnicodeString decomposed = nfkd->normalize(source, status);
  if (U_FAILURE(status)) throw Error(std::string("NFKD normalization failed: ") + u_errorName(status));

  std::string out;
  out.reserve(text.size());
  for (std::int32_t i = 0; i < decomposed.length();) {
    const UChar32 cp = decomposed.char32At(i);
    i += U16_LENGTH(cp);
    if (cp < 0x80) out.push_back(static_cast<char>(cp));
  }
  return out;
}

TokenList tokenize_filter_stem(std::string_view text, const StopwordSet& stopwords) {
  TokenList tokens;
  std::string raw;
  auto flush = [&] {
    if (raw.empty()) return;
    std::string stripped;
    stripped.reserve(raw.size());
    for (char c : raw) {
      if (c != '\'') stripped.push_back(c);
    }
    if (!stripped.empty() && !stopwords.contains(raw) && !stopwords.contains(stripped)) {
      auto stem = stem_english(stripped);
      if (!stem.empty() && !stopwords.contains(stem)) tokens.push_back(std::move(stem));
    }
    raw.clear();
  };
  for (char c : text) {
    const char l = lower(c);
    if ((l >= 'a' && l <= 'z') || (l >= '0' && l <= '9') || l == '\'') {
      raw.push_back(l);
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

TokenList ClassicalPreprocessor::operator()(std::string_view text) const {
  return tokenize_filter_stem(fold_ascii(demojize(strip_artifacts(text), *lexicon_)), *stopwords_);
}

TokenList preprocess_classical(std::string_view text) {
  static const ClassicalPreprocessor pipeline(EmoticonLexicon::bundled(), bundled_stopwords());
  return pipeline(text);
}

std::string preprocess_light(std::string_view text) { return strip_artifacts(text); }

}  // namespace tweetemo
