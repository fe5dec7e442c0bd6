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

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "tweetemo/error.hpp"
#include "tweetemo/eval.hpp"
#include "tweetemo/random.hpp"

namespace {

using namespace tweetemo;

EvalReport four_record_example() {
  const std::vector<LabelPair> pairs = {{Emotion::anger, Emotion::anger},
                                        {Emotion::anger, Emotion::fear},
                                        {Emotion::fear, Emotion::fear},
                                        {Emotion::fear, Emotion::fear}};
  return score(pairs);
}

TEST(Score, HandCountedExample) {
  const auto r = four_record_example();
  EXPECT_EQ(r.accuracy, 0.75);
  EXPECT_EQ(r.per_class[0].precision, 1.0);
  EXPECT_EQ(r.per_class[0].recall, 0.5);
  EXPECT_DOUBLE_EQ(r.per_class[0].f1, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.per_class[1].precision, 2.0 / 3.0);
  EXPECT_EQ(r.per_class[1].recall, 1.0);
  EXPECT_DOUBLE_EQ(r.per_class[1].f1, 0.8);
  EXPECT_EQ(r.confusion, (std::vector<std::vector<std::size_t>>{{1, 1}, {0, 2}}));
}

TEST(Score, PerfectPredictions) {
  std::vector<LabelPair> pairs;
  for (int i = 0; i < 10; ++i) pairs.emplace_back(kAllEmotions[i % 5], kAllEmotions[i % 5]);
  const auto r = score(pairs);
  EXPECT_EQ(r.accuracy, 1.0);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(r.confusion[i][j], i == j ? 2u : 0u);
    EXPECT_EQ(r.per_class[i].f1, 1.0);
  }
}

TEST(Score, DegeneratePredictorFlagsZeroDenominators) {
  std::vector<LabelPair> pairs;
  for (int i = 0; i < 50; ++i) pairs.emplace_back(kAllEmotions[i % 5], Emotion::joy);
  const auto r = score(pairs);
  EXPECT_DOUBLE_EQ(r.accuracy, 0.2);
  EXPECT_EQ(r.per_class[2].recall, 1.0);
  EXPECT_DOUBLE_EQ(r.per_class[2].precision, 0.2);
  EXPECT_TRUE(r.per_class[0].precision_undefined);
  EXPECT_EQ(r.per_class[0].precision, 0.0);
  EXPECT_TRUE(r.per_class[0].f1_undefined);
  EXPECT_FALSE(r.per_class[0].recall_undefined);
}

TEST(Score, EmptyInputRejected) {
  EXPECT_THROW(score(std::vector<LabelPair>{}), DataError);
  const std::vector<LabelPair> p = {{Emotion::neutral, Emotion::joy}};
  EXPECT_THROW(score(p, std::vector<Emotion>{Emotion::joy, Emotion::anger}), DataError);
}

TEST(Score, InvariantsOnRandomSets) {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<LabelPair> pairs;
    const auto n = 1 + rng.below(60);
    for (std::size_t i = 0; i < n; ++i) {
      pairs.emplace_back(kAllEmotions[rng.below(5)], kAllEmotions[rng.below(5)]);
    }
    const auto r = score(pairs);
    EXPECT_NEAR(r.micro_f1, r.accuracy, 1e-12);
    std::size_t total = 0, trace = 0;
    for (std::size_t i = 0; i < r.classes.size(); ++i) {
      std::size_t row = 0;
      for (auto v : r.confusion[i]) row += v;
      EXPECT_EQ(row, r.per_class[i].support);
      total += row;
      trace += r.confusion[i][i];
      for (double m : {r.per_class[i].precision, r.per_class[i].recall, r.per_class[i].f1}) {
        EXPECT_GE(m, 0.0);
        EXPECT_LE(m, 1.0);
      }
    }
    EXPECT_EQ(total, n);
    EXPECT_EQ(r.accuracy, static_cast<double>(trace) / static_cast<double>(total));
    auto shuffled = pairs;
    shuffle(shuffled, rng);
    EXPECT_EQ(report_to_json(score(shuffled)), report_to_json(r));
    std::vector<LabelPair> gold_only;
    for (const auto& [g, p] : pairs) gold_only.emplace_back(g, g);
    const auto diag = score(gold_only);
    for (std::size_t i = 0; i < diag.classes.size(); ++i) {
      for (std::size_t j = 0; j < diag.classes.size(); ++j) {
        if (i != j) EXPECT_EQ(diag.confusion[i][j], 0u);
      }
    }
  }
}

TEST(Render, RoundTripsInAllFormats) {
  auto r = four_record_example();
  r.provenance = {{"model", "fixture"}};
  for (auto fmt : {ReportFormat::text, ReportFormat::json, ReportFormat::csv}) {
    const auto back = parse_report(render(r, fmt), fmt);
    EXPECT_EQ(back.classes, r.classes);
    EXPECT_EQ(back.confusion, r.confusion);
    EXPECT_EQ(back.per_class, r.per_class) << to_string(fmt);
    EXPECT_EQ(back.accuracy, r.accuracy);
    EXPECT_EQ(back.micro_f1, r.micro_f1);
    EXPECT_EQ(back.macro_f1, r.macro_f1);
  }
  EXPECT_EQ(parse_report(render(r, ReportFormat::json), ReportFormat::json).provenance, r.provenance);
}

TEST(Render, TextLayoutHasLabelColumns) {
  const auto text = render(four_record_example(), ReportFormat::text);
  EXPECT_NE(text.find("precision"), std::string::npos);
  EXPECT_NE(text.find("f1-score"), std::string::npos);
  EXPECT_NE(text.find("anger"), std::string::npos);
  EXPECT_NE(text.find("0.7500"), std::string::npos);
  const auto csv = render(four_record_example(), ReportFormat::csv);
  EXPECT_EQ(csv, "gold\\predicted,anger,fear\nanger,1,1\nfear,0,2\n");
}

TEST(Render, NormalizedConfusionRows) {
  const auto n = four_record_example().normalized_confusion();
  EXPECT_EQ(n[0][0], 0.5);
  EXPECT_EQ(n[1][1], 1.0);
}

}  // namespace
