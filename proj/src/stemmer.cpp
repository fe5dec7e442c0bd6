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

#include "tweetemo/stemmer.hpp"

#include <array>
#include <string>
#include <tuple>
#include <utility>

// Snowball English as implemented by NLTK. NLTK tracks R1 and R2 as suffix
// strings rather than positions, which differs from the reference algorithm
// on a handful of words (e.g. "-ization" forms keep their "ize"); stems here
// follow NLTK so vocabularies match models built with it.

namespace tweetemo {

namespace {

// 'Y' marks a consonant y and is never a vowel.
constexpr bool is_vowel(char c) noexcept {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool contains_vowel(std::string_view s) {
  for (char c : s) {
    if (is_vowel(c)) return true;
  }
  return false;
}

bool ends_double(std::string_view w) {
  static constexpr std::array<std::string_view, 9> kDoubles = {"bb", "dd", "ff", "gg", "mm",
                                                                "nn", "pp", "rr", "tt"};
  for (auto d : kDoubles) {
    if (w.ends_with(d)) return true;
  }
  return false;
}

bool one_of(char c, std::string_view set) {
  return set.find(c) != std::string_view::npos;
}

// s[:-n] in Python terms.
std::string chop(const std::string& s, std::size_t n) {
  return s.size() > n ? s.substr(0, s.size() - n) : std::string();
}

// Replaces the last n characters of a region by `with` when the region is at
// least n long, otherwise yields `fallback`.
std::string region_replace(const std::string& r, std::size_t n, std::string_view with,
                           std::string_view fallback = "") {
  return r.size() >= n ? chop(r, n) + std::string(with) : std::string(fallback);
}

struct State {
  std::string word, r1, r2;

  bool ends(std::string_view s) const { return std::string_view(word).ends_with(s); }
  bool r1_ends(std::string_view s) const { return std::string_view(r1).ends_with(s); }
  bool r2_ends(std::string_view s) const { return std::string_view(r2).ends_with(s); }

  void drop(std::size_t n) {
    word = chop(word, n);
    r1 = chop(r1, n);
    r2 = chop(r2, n);
  }

  void replace(std::size_t n, std::string_view with, std::string_view r2_fallback = "") {
    word = chop(word, n) + std::string(with);
    r1 = region_replace(r1, n, with);
    r2 = region_replace(r2, n, with, r2_fallback);
  }

  char back(std::size_t k) const { return word.size() >= k ? word[word.size() - k] : '\0'; }
};

constexpr std::array<std::pair<std::string_view, std::string_view>, 40> kSpecialWords = {{
    {"skis", "ski"},         {"skies", "sky"},        {"dying", "die"},         {"lying", "lie"},
    {"tying", "tie"},        {"idly", "idl"},         {"gently", "gentl"},      {"ugly", "ugli"},
    {"early", "earli"},      {"only", "onli"},        {"singly", "singl"},      {"sky", "sky"},
    {"news", "news"},        {"howe", "howe"},        {"atlas", "atlas"},       {"cosmos", "cosmos"},
    {"bias", "bias"},        {"andes", "andes"},      {"inning", "inning"},     {"innings", "inning"},
    {"outing", "outing"},    {"outings", "outing"},   {"canning", "canning"},   {"cannings", "canning"},
    {"herring", "herring"},  {"herrings", "herring"}, {"earring", "earring"},   {"earrings", "earring"},
    {"proceed", "proceed"},  {"proceeds", "proceed"}, {"proceeded", "proceed"}, {"proceeding", "proceed"},
    {"exceed", "exceed"},    {"exceeds", "exceed"},   {"exceeded", "exceed"},   {"exceeding", "exceed"},
    {"succeed", "succeed"},  {"succeeds", "succeed"}, {"succeeded", "succeed"}, {"succeeding", "succeed"},
}};

std::pair<std::string, std::string> standard_regions(const std::string& word) {
  std::string r1, r2;
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (!is_vowel(word[i]) && is_vowel(word[i - 1])) {
      r1 = word.substr(i + 1);
      break;
    }
  }
  for (std::size_t i = 1; i < r1.size(); ++i) {
    if (!is_vowel(r1[i]) && is_vowel(r1[i - 1])) {
      r2 = r1.substr(i + 1);
      break;
    }
  }
  return {r1, r2};
}

template <std::size_t N>
std::string_view first_suffix(const State& s, const std::array<std::string_view, N>& suffixes) {
  for (auto suffix : suffixes) {
    if (s.ends(suffix)) return suffix;
  }
  return {};
}

void step0(State& s) {
  static constexpr std::array<std::string_view, 3> kSuffixes = {"'s'", "'s", "'"};
  const auto suffix = first_suffix(s, kSuffixes);
  if (!suffix.empty()) s.drop(suffix.size());
}

void step1a(State& s) {
  static constexpr std::array<std::string_view, 6> kSuffixes = {"sses", "ied", "ies", "us", "ss", "s"};
  const auto suffix = first_suffix(s, kSuffixes);
  if (suffix == "sses") {
    s.drop(2);
  } else if (suffix == "ied" || suffix == "ies") {
    s.drop(s.word.size() - 3 > 1 ? 2 : 1);
  } else if (suffix == "s") {
    if (contains_vowel(chop(s.word, 2))) s.drop(1);
  }
}

void step1b(State& s) {
  static constexpr std::array<std::string_view, 6> kSuffixes = {"eedly", "ingly", "edly", "eed", "ing", "ed"};
  const auto suffix = first_suffix(s, kSuffixes);
  if (suffix.empty()) return;
  if (suffix == "eed" || suffix == "eedly") {
    if (s.r1_ends(suffix)) s.replace(suffix.size(), "ee");
    return;
  }
  if (!contains_vowel(chop(s.word, suffix.size()))) return;
  s.drop(suffix.size());
  if (s.ends("at") || s.ends("bl") || s.ends("iz")) {
    s.word += 'e';
    s.r1 += 'e';
    if (s.word.size() > 5 || s.r1.size() >= 3) s.r2 += 'e';
  } else if (ends_double(s.word)) {
    s.drop(1);
  } else if (s.r1.empty() &&
             ((s.word.size() >= 3 && !is_vowel(s.back(1)) && !one_of(s.back(1), "wxY") && is_vowel(s.back(2)) &&
               !is_vowel(s.back(3))) ||
              (s.word.size() == 2 && is_vowel(s.word[0]) && !is_vowel(s.word[1])))) {
    s.word += 'e';
  }
}

void step1c(State& s) {
  if (s.word.size() > 2 && one_of(s.back(1), "yY") && !is_vowel(s.back(2))) {
    s.word.back() = 'i';
    s.r1 = s.r1.empty() ? std::string() : chop(s.r1, 1) + "i";
    s.r2 = s.r2.empty() ? std::string() : chop(s.r2, 1) + "i";
  }
}

void step2(State& s) {
  static constexpr std::array<std::string_view, 24> kSuffixes = {
      "ization", "ational", "fulness", "ousness", "iveness", "tional", "biliti", "lessli",
      "entli",   "ation",   "alism",   "aliti",   "ousli",   "iviti",  "fulli",  "enci",
      "anci",    "abli",    "izer",    "ator",    "alli",    "bli",    "ogi",    "li"};
  const auto suffix = first_suffix(s, kSuffixes);
  if (suffix.empty() || !s.r1_ends(suffix)) return;
  const std::size_t n = suffix.size();
  if (suffix == "tional" || suffix == "entli" || suffix == "fulli" || suffix == "lessli") {
    s.drop(2);
  } else if (suffix == "enci" || suffix == "anci" || suffix == "abli") {
    s.replace(1, "e");
  } else if (suffix == "izer" || suffix == "ization") {
    s.replace(n, "ize");
  } else if (suffix == "ational" || suffix == "ation" || suffix == "ator") {
    s.replace(n, "ate", "e");
  } else if (suffix == "alism" || suffix == "aliti" || suffix == "alli") {
    s.replace(n, "al");
  } else if (suffix == "fulness") {
    s.drop(4);
  } else if (suffix == "ousli" || suffix == "ousness") {
    s.replace(n, "ous");
  } else if (suffix == "iveness" || suffix == "iviti") {
    s.replace(n, "ive", "e");
  } else if (suffix == "biliti" || suffix == "bli") {
    s.replace(n, "ble");
  } else if (suffix == "ogi") {
    if (s.back(4) == 'l') s.drop(1);
  } else if (suffix == "li") {
    if (one_of(s.back(3), "cdeghkmnrt")) s.drop(2);
  }
}

void step3(State& s) {
  static constexpr std::array<std::string_view, 9> kSuffixes = {"ational", "tional", "alize", "icate", "iciti",
                                                                "ative",   "ical",   "ness",  "ful"};
  const auto suffix = first_suffix(s, kSuffixes);
  if (suffix.empty() || !s.r1_ends(suffix)) return;
  const std::size_t n = suffix.size();
  if (suffix == "tional") {
    s.drop(2);
  } else if (suffix == "ational") {
    s.replace(n, "ate");
  } else if (suffix == "alize") {
    s.drop(3);
  } else if (suffix == "icate" || suffix == "iciti" || suffix == "ical") {
    s.replace(n, "ic");
  } else if (suffix == "ful" || suffix == "ness") {
    s.drop(n);
  } else if (suffix == "ative") {
    if (s.r2_ends(suffix)) s.drop(5);
  }
}

void step4(State& s) {
  static constexpr std::array<std::string_view, 18> kSuffixes = {
      "ement", "ance", "ence", "able", "ible", "ment", "ant", "ent", "ism",
      "ate",   "iti",  "ous",  "ive",  "ize",  "ion",  "al",  "er",  "ic"};
  const auto suffix = first_suffix(s, kSuffixes);
  if (suffix.empty() || !s.r2_ends(suffix)) return;
  if (suffix == "ion") {
    if (one_of(s.back(4), "st")) s.drop(3);
  } else {
    s.drop(suffix.size());
  }
}

void step5(State& s) {
  if (s.r2_ends("l") && s.back(2) == 'l') {
    s.word.pop_back();
  } else if (s.r2_ends("e")) {
    s.word.pop_back();
  } else if (s.r1_ends("e")) {
    if (s.word.size() >= 4 && (is_vowel(s.back(2)) || one_of(s.back(2), "wxY") || !is_vowel(s.back(3)) ||
                               is_vowel(s.back(4)))) {
      s.word.pop_back();
    }
  }
}

}  // namespace

std::string stem_english(std::string_view input) {
  std::string word(input);
  for (char& c : word) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  if (word.size() <= 2) return word;
  for (const auto& [special, stem] : kSpecialWords) {
    if (word == special) return std::string(stem);
  }

  if (word.front() == '\'') word.erase(0, 1);
  if (!word.empty() && word.front() == 'y') word.front() = 'Y';
  for (std::size_t i = 1; i < word.size(); ++i) {
    if (is_vowel(word[i - 1]) && word[i] == 'y') word[i] = 'Y';
  }

  State s;
  s.word = word;
  if (word.starts_with("gener") || word.starts_with("arsen") || word.starts_with("commun")) {
    s.r1 = word.substr(word.starts_with("commun") ? 6 : 5);
    for (std::size_t i = 1; i < s.r1.size(); ++i) {
      if (!is_vowel(s.r1[i]) && is_vowel(s.r1[i - 1])) {
        s.r2 = s.r1.substr(i + 1);
        break;
      }
    }
  } else {
    std::tie(s.r1, s.r2) = standard_regions(word);
  }

  step0(s);
  step1a(s);
  step1b(s);
  step1c(s);
  step2(s);
  step3(s);
  step4(s);
  step5(s);

  for (char& c : s.word) {
    if (c == 'Y') c = 'y';
  }
  return s.word;
}

}  // namespace tweetemo
