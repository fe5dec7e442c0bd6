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

#include <iostream>
#include <string>
#include <vector>

#include "synthetic_corpus.hpp"
#include "tweetemo/checksum.hpp"
#include "tweetemo/corpus.hpp"

namespace {

using namespace tweetemo;

// Small noise-free split written straight as JSONL: 10 train, 5 validation
// and 5 test tweets per class.
void write_mini(const std::filesystem::path& dir, std::uint64_t seed) {
  std::filesystem::create_directories(dir);
  SplitMix64 rng(seed);
  const std::pair<const char*, std::size_t> parts[] = {{"train", 10}, {"validation", 5}, {"test", 5}};
  for (const auto& [name, per_class] : parts) {
    std::vector<LabeledTweet> tweets;
    for (auto e : kAllEmotions) {
      for (std::size_t i = 0; i < per_class; ++i) {
        tweets.push_back({std::string(name) + "-" + std::string(to_string(e)) + "-" + std::to_string(i),
                          testing::synthetic_tweet(e, rng), e});
      }
    }
    write_file(dir / (std::string(name) + ".jsonl"), to_jsonl(tweets));
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || (args[0] == "--mini" && args.size() < 2)) {
    std::cerr << "usage: make_synthetic_corpus [--mini] <out_dir> [seed]\n";
    return 2;
  }
  if (args[0] == "--mini") {
    write_mini(args[1], args.size() > 2 ? std::stoull(args[2]) : 7);
    return 0;
  }
  testing::SyntheticCorpusOptions options;
  if (args.size() > 1) options.seed = std::stoull(args[1]);
  const auto paths = testing::write_synthetic_corpus(args[0], options);
  std::cout << paths.wassa_dir.string() << "\n" << paths.neutral_csv.string() << "\n";
  return 0;
}
