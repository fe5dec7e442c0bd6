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

#include <string>
#include <string_view>
#include <vector>

#include "tweetemo/lexicon.hpp"

namespace tweetemo {

using TokenList = std::vector<std::string>;

// Removes @mentions (`@` followed by [A-Za-z0-9_]+), URLs (http://, https://
// or www. at a word boundary, up to the next whitespace, trailing
// `.,!?;:)]}'"` kept) and every '#' character. Whitespace runs collapse to a
// single space and the result is trimmed.
std::string strip_artifacts(std::string_view text);

// Replaces each emoji sequence (longest match) and each whitespace-delimited
// western emoticon by its phrase. Emoji absent from the lexicon are dropped.
// An emoticon glued to the end of a word ("great:)") is also replaced when
// the emoticon starts with a punctuation character.
std::string demojize(std::string_view text, const EmoticonLexicon& lexicon);

// NFKD, then combining marks and any remaining non-ASCII code points are
// removed. Invalid UTF-8 is dropped as well.
std::string fold_ascii(std::string_view text);

// Lowercases, splits on [^a-z0-9']+, strips apostrophes, removes stopwords
// and stems with the Snowball English stemmer. A token is dropped when its
// apostrophe form, its stripped form or its stem is a stopword.
TokenList tokenize_filter_stem(std::string_view text, const StopwordSet& stopwords);

// Full classical pipeline with caller-supplied resources.
class ClassicalPreprocessor {
 public:
  ClassicalPreprocessor(const EmoticonLexicon& lexicon, const StopwordSet& stopwords)
      : lexicon_(&lexicon), stopwords_(&stopwords) {}

  TokenList operator()(std::string_view text) const;

 private:
  const EmoticonLexicon* lexicon_;
  const StopwordSet* stopwords_;
};

// tokenize_filter_stem(fold_ascii(demojize(strip_artifacts(text)))) with the
// bundled lexicons and stopwords.
TokenList preprocess_classical(std::string_view text);

// Artifact stripping only; casing and emoji are kept.
std::string preprocess_light(std::string_view text);

}  // namespace tweetemo
