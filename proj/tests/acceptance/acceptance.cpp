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

// End-to-end acceptance checks. Prints one line per criterion and exits
// nonzero when a hard criterion fails. Soft criteria (accuracy targets that
// depend on the reference corpus) are reported but never fail the run.
//
// Set TWEETEMO_WASSA_DIR and TWEETEMO_NEUTRAL_CSV to run against the real
// corpora; otherwise a deterministic synthetic stand-in is generated.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "json.hpp"
#include "oracles/qp_oracle.hpp"
#include "oracles/tfidf_oracle.hpp"
#include "synthetic_corpus.hpp"
#include "test_support.hpp"
#include "tweetemo/checksum.hpp"
#include "tweetemo/ensemble.hpp"
#include "tweetemo/eval.hpp"
#include "tweetemo/random.hpp"
#include "tweetemo/smo.hpp"
#include "tweetemo/svm.hpp"
#include "tweetemo/vectorizer.hpp"

namespace {

using namespace tweetemo;
using tweetemo::testing::slurp;
namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

enum class Kind { hard, soft };

struct Outcome {
  bool pass = false;
  std::string detail;
  bool skipped = false;
};

int hard_failures = 0;

void report(Kind kind, const std::string& name, const std::function<Outcome()>& check) {
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::string tag;
  if (o.skipped) {
    tag = "SKIP";
  } else if (kind == Kind::soft) {
    tag = o.pass ? "SOFT-PASS" : "SOFT-FAIL";
  } else {
    tag = o.pass ? "PASS" : "FAIL";
    if (!o.pass) ++hard_failures;
  }
  std::printf("[%s] %s: %s\n", tag.c_str(), name.c_str(), o.detail.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// ---------------------------------------------------------------- SMO

Outcome smo_vs_oracle() {
  const auto t0 = Clock::now();
  constexpr int kProblems = 24;
  double worst_gap = 0;
  int prediction_mismatches = 0;
  for (int seed = 1; seed <= kProblems; ++seed) {
    SplitMix64 rng(mix_seed(20261016, static_cast<std::uint64_t>(seed)));
    const std::size_t n = 6 + rng.below(7), d = 2 + rng.below(4);
    static constexpr double kC[] = {0.5, 1.0, 2.0};
    const double c = kC[rng.below(3)], gamma = 1.0 / static_cast<double>(d);
    oracle::Matrix dense;
    std::vector<SparseVector> x;
    std::vector<int> y;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> row(d);
      for (auto& v : row) v = rng.uniform() * 2.0 - 1.0;
      int label = row[0] - 0.7 * row[1] + 0.4 * (rng.uniform() - 0.5) > 0 ? 1 : -1;
      if (i < 2) label = i == 0 ? 1 : -1;
      y.push_back(label);
      x.push_back(SparseVector::from_dense(row));
      dense.push_back(std::move(row));
    }
    const auto s = solve_smo(x, y, {.C = c, .gamma = gamma, .tol = 1e-8});
    const auto k = oracle::rbf_gram(dense, gamma);
    const auto o = oracle::solve_dual_qp(k, y, c);
    worst_gap = std::max(worst_gap, std::abs(s.objective - o.objective));
    for (std::size_t i = 0; i < n; ++i) {
      double fs = s.bias, fo = o.bias;
      for (std::size_t j = 0; j < n; ++j) {
        fs += s.alpha[j] * y[j] * k[j][i];
        fo += o.alpha[j] * y[j] * k[j][i];
      }
      if ((fs >= 0) != (fo >= 0)) ++prediction_mismatches;
    }
  }
  const double elapsed = seconds_since(t0);
  return {worst_gap <= 1e-6 && prediction_mismatches == 0 && elapsed < 5.0,
          fmt::format("{} problems, max |objective gap| {:.2e} (tol 1e-6), {} prediction mismatches, {:.2f} s "
                      "including oracle (limit 5 s)",
                      kProblems, worst_gap, prediction_mismatches, elapsed)};
}

// ---------------------------------------------------------------- TF-IDF

Outcome tfidf_vs_oracle() {
  static const std::vector<std::string> kWords = {"happi", "sad", "angri", "fear", "day", "love", "hate",
                                                  "cri", "smile", "work", "night", "good", "bad"};
  SplitMix64 rng(11);
  std::vector<TokenList> docs(10);
  for (auto& doc : docs) {
    const auto len = 1 + rng.below(9);
    for (std::size_t i = 0; i < len; ++i) doc.push_back(kWords[rng.below(kWords.size())]);
  }
  const auto expected = oracle::brute_force_tfidf(docs, docs);
  const auto model = TfIdfModel::fit(docs);
  if (model.terms() != expected.vocabulary) return {false, "vocabulary differs from oracle"};
  double worst = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const auto row = model.transform(docs[i]).to_dense();
    for (std::size_t j = 0; j < row.size(); ++j) worst = std::max(worst, std::abs(row[j] - expected.rows[i][j]));
  }
  return {worst <= 1e-9, fmt::format("10 docs, {} terms, max |component diff| {:.2e} (tol 1e-9)",
                                     expected.vocabulary.size(), worst)};
}

// ---------------------------------------------------------------- metrics

Outcome metric_identities() {
  SplitMix64 rng(1000);
  double worst = 0;
  for (int set = 0; set < 1000; ++set) {
    std::vector<LabelPair> pairs;
    const auto n = 1 + rng.below(300);
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(kAllEmotions[rng.below(5)], kAllEmotions[rng.below(5)]);
    const auto r = score(pairs);
    worst = std::max(worst, std::abs(r.micro_f1 - r.accuracy));
  }
  const std::vector<LabelPair> example = {{Emotion::anger, Emotion::anger},
                                          {Emotion::anger, Emotion::fear},
                                          {Emotion::fear, Emotion::fear},
                                          {Emotion::fear, Emotion::fear}};
  const auto r = score(example);
  const auto& a = r.per_class[0];
  const auto& f = r.per_class[1];
  const bool exact = r.accuracy == 0.75 && a.precision == 1.0 && a.recall == 0.5 && a.f1 == 2.0 / 3.0 &&
                     f.precision == 2.0 / 3.0 && f.recall == 1.0 && f.f1 == 0.8;
  return {worst <= 1e-12 && exact,
          fmt::format("1000 random sets, max |micro-F1 - accuracy| {:.1e} (tol 1e-12); 4-record example {}", worst,
                      exact ? "reproduced exactly" : "MISMATCH")};
}

// ---------------------------------------------------------------- ensemble

std::vector<double> random_logprobs(SplitMix64& rng) {
  std::vector<double> v(kNumEmotions);
  for (auto& x : v) x = (rng.uniform() - 0.5) * 10.0;
  return normalize_log(v);
}

Outcome ensemble_properties() {
  const std::vector<Emotion> classes(kAllEmotions.begin(), kAllEmotions.end());
  SplitMix64 rng(10000);
  int agreement = 0, agreement_violations = 0, shift_violations = 0, order_violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto a = random_logprobs(rng), b = random_logprobs(rng);
    auto fuse_one = [&](const std::vector<double>& p, const std::vector<double>& q, bool swap) {
      std::vector<std::vector<LogProbRecord>> streams = {{{"r", std::nullopt, "svm", classes, p}},
                                                         {{"r", std::nullopt, "bertweet", classes, q}}};
      if (swap) std::swap(streams[0], streams[1]);
      return fuse(streams).records.at(0);
    };
    const auto f = fuse_one(a, b, false);
    if (argmax(a) == argmax(b)) {
      ++agreement;
      if (f.predicted != classes[argmax(a)]) ++agreement_violations;
    }
    auto shifted = a;
    const double c = (rng.uniform() - 0.5) * 20.0;
    for (auto& x : shifted) x += c;
    if (fuse_one(shifted, b, false).predicted != f.predicted) ++shift_violations;
    const auto g = fuse_one(a, b, true);
    if (g.scores != f.scores || g.predicted != f.predicted) ++order_violations;
  }

  // Fixture streams against the independent Python recomputation.
  const fs::path dir = fs::path(TWEETEMO_FIXTURES) / "fusion";
  const std::vector<std::vector<LogProbRecord>> streams = {validate_stream(dir / "svm_test.jsonl"),
                                                           validate_stream(dir / "bertweet_test.jsonl")};
  const auto fused = fuse(streams);
  const auto expected = json::parse(slurp(dir / "expected.json"));
  int fixture_mismatches = 0;
  for (const auto& r : fused.records) {
    const auto& scores = expected.at("scores").at(r.id);
    if (r.scores != scores.get<std::vector<double>>()) ++fixture_mismatches;
    if (to_string(r.predicted) != expected.at("predictions").at(r.id).get<std::string>()) ++fixture_mismatches;
  }
  if (fused.records.size() != expected.at("total").get<std::size_t>()) ++fixture_mismatches;

  const bool ok = agreement_violations == 0 && shift_violations == 0 && order_violations == 0 && fixture_mismatches == 0;
  return {ok, fmt::format("10000 pairs: agreement {} violations ({} agreeing pairs), shift {}, order {}; fixture "
                          "fusion of {} records: {} mismatches vs brute-force script",
                          agreement_violations, agreement, shift_violations, order_violations, fused.records.size(),
                          fixture_mismatches)};
}

// ---------------------------------------------------------------- pipeline

struct Pipeline {
  fs::path root;
  fs::path wassa_dir;
  fs::path neutral_csv;
  bool synthetic = true;
};

tweetemo::testing::ProcessResult cli(const std::vector<std::string>& args) {
  std::vector<std::string> all = {"--quiet"};
  all.insert(all.end(), args.begin(), args.end());
  auto r = tweetemo::testing::run_process(TWEETEMO_CLI, all);
  if (r.exit_code != 0) {
    std::string joined;
    for (const auto& a : args) joined += " " + a;
    throw std::runtime_error("tweetemo" + joined + " exited " + std::to_string(r.exit_code) + ": " + r.err);
  }
  return r;
}

struct RunArtifacts {
  fs::path data, model;
  std::string report_text, report_json;
};

RunArtifacts run_pipeline(const Pipeline& p, const std::string& name, bool drop_neutral) {
  RunArtifacts a{p.root / name / "data", p.root / name / "svm.json", {}, {}};
  std::vector<std::string> prepare = {"--seed", "42", "prepare", "--wassa", p.wassa_dir, "--out", a.data};
  if (drop_neutral) prepare.push_back("--drop-neutral");
  else prepare.insert(prepare.end(), {"--neutral", p.neutral_csv});
  cli(prepare);
  cli({"--seed", "42", "train", "--model", "svm", "--data", a.data, "--out", a.model});
  a.report_text = cli({"evaluate", "--model", a.model, "--data", a.data}).out;
  a.report_json = cli({"--format", "json", "evaluate", "--model", a.model, "--data", a.data}).out;
  return a;
}

}  // namespace

int main() {
  std::printf("tweetemo acceptance suite\n");
  report(Kind::hard, "SMO correctness vs brute-force QP", smo_vs_oracle);
  report(Kind::hard, "TF-IDF oracle equivalence", tfidf_vs_oracle);
  report(Kind::hard, "Metric identities", metric_identities);
  report(Kind::hard, "Ensemble properties and fixture fusion", ensemble_properties);

  tweetemo::testing::TempDir tmp("acceptance");
  Pipeline p{tmp.path(), {}, {}, true};
  const char* wassa = std::getenv("TWEETEMO_WASSA_DIR");
  const char* neutral = std::getenv("TWEETEMO_NEUTRAL_CSV");
  if (wassa && neutral && *wassa && *neutral) {
    p.wassa_dir = wassa;
    p.neutral_csv = neutral;
    p.synthetic = false;
  } else {
    const auto paths = tweetemo::testing::write_synthetic_corpus(tmp.path() / "raw");
    p.wassa_dir = paths.wassa_dir;
    p.neutral_csv = paths.neutral_csv;
  }
  std::printf("corpus: %s\n", p.synthetic ? "synthetic stand-in (set TWEETEMO_WASSA_DIR / TWEETEMO_NEUTRAL_CSV "
                                            "for the reference corpora)"
                                          : "reference corpora from the environment");

  RunArtifacts first;
  double svm_seconds = 0;
  report(Kind::hard, "Determinism of prepare -> train(svm) -> evaluate", [&]() -> Outcome {
    auto t0 = Clock::now();
    first = run_pipeline(p, "run1", false);
    svm_seconds = seconds_since(t0);
    const auto second = run_pipeline(p, "run2", false);
    std::vector<std::string> differing;
    for (const auto* f : {"train.jsonl", "validation.jsonl", "test.jsonl", "manifest.json"}) {
      if (slurp(first.data / f) != slurp(second.data / f)) differing.push_back(f);
    }
    if (slurp(first.model) != slurp(second.model)) differing.push_back("model");
    if (first.report_text != second.report_text) differing.push_back("text report");
    if (first.report_json != second.report_json) differing.push_back("json report");
    std::string list;
    for (const auto& d : differing) list += " " + d;
    return {differing.empty(), differing.empty()
                                   ? fmt::format("seed 42, two runs: model ({}) and reports byte-identical",
                                                 sha256_file(first.model).substr(0, 16))
                                   : "differs:" + list};
  });

  report(Kind::hard, "Log-prob contract on exported SVM stream", [&]() -> Outcome {
    const auto stream = p.root / "svm_test.jsonl";
    cli({"export-logprobs", "--model", first.model, "--data", first.data, "--split", "test", "--out", stream});
    std::size_t records = 0, positive = 0, unnormalized = 0;
    double worst_lse = 0;
    tweetemo::testing::for_each_jsonl(stream.string(), [&](const json& j) {
      ++records;
      std::vector<double> v;
      for (const auto& [k, x] : j.at("logprobs").items()) v.push_back(x.get<double>());
      for (double x : v) positive += x > 0.0;
      const double lse = logsumexp(v);
      worst_lse = std::max(worst_lse, std::abs(lse));
      unnormalized += std::abs(lse) > 1e-6;
    });
    validate_stream(stream);
    const bool ok = records == 750 && positive == 0 && unnormalized == 0;
    return {ok, fmt::format("{} records (expected 750), {} positive entries, {} with |logsumexp| > 1e-6 (max {:.1e})",
                            records, positive, unnormalized, worst_lse)};
  });

  report(Kind::soft, "5x1500 corpus accuracy (SVM >= 0.80, MNB 0.80 +/- 0.05, GNB 0.73 +/- 0.07, neutral worst SVM F1)",
         [&]() -> Outcome {
           const auto t0 = Clock::now();
           std::map<std::string, double> acc;
           json svm_report = json::parse(first.report_json);
           acc["svm"] = svm_report.at("accuracy");
           for (const auto* m : {"mnb", "gnb"}) {
             const auto model = p.root / fmt::format("{}.json", m);
             cli({"train", "--model", m, "--data", first.data, "--out", model});
             acc[m] = json::parse(cli({"--format", "json", "evaluate", "--model", model, "--data", first.data}).out)
                          .at("accuracy");
           }
           std::string worst_class;
           double worst_f1 = 2;
           for (const auto& c : svm_report.at("per_class")) {
             if (c.at("f1").get<double>() < worst_f1) {
               worst_f1 = c.at("f1");
               worst_class = c.at("label");
             }
           }
           const double minutes = (svm_seconds + seconds_since(t0)) / 60.0;
           const bool ok = acc["svm"] >= 0.80 && std::abs(acc["mnb"] - 0.80) <= 0.05 &&
                           std::abs(acc["gnb"] - 0.73) <= 0.07 && worst_class == "neutral" && minutes < 15;
           auto detail = fmt::format("SVM {:.4f}, MNB {:.4f}, GNB {:.4f}, worst SVM F1 '{}' {:.4f}, {:.1f} min",
                                     acc["svm"], acc["mnb"], acc["gnb"], worst_class, worst_f1, minutes);
           if (p.synthetic) {
             return {ok, "reference corpora not available, synthetic stand-in measured: " + detail, true};
           }
           return {ok, detail};
         });

  report(Kind::hard, "Drop-neutral ablation (4-class run, SVM accuracy >= 5-class)", [&]() -> Outcome {
    const auto four = run_pipeline(p, "four", true);
    const auto j4 = json::parse(four.report_json);
    const auto j5 = json::parse(first.report_json);
    const auto& confusion = j4.at("confusion");
    bool shape = confusion.size() == 4;
    for (const auto& row : confusion) shape = shape && row.size() == 4;
    const double a4 = j4.at("accuracy"), a5 = j5.at("accuracy");
    return {shape && a4 >= a5, fmt::format("{}x{} confusion matrix, 4-class accuracy {:.4f} vs 5-class {:.4f}",
                                           confusion.size(), confusion.empty() ? 0 : confusion[0].size(), a4, a5)};
  });

  std::printf("%s\n", hard_failures == 0 ? "all hard criteria passed" : "hard criteria FAILED");
  return hard_failures == 0 ? 0 : 1;
}
