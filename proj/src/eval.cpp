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

#include "tweetemo/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "tweetemo/corpus.hpp"
#include "tweetemo/error.hpp"

namespace tweetemo {

namespace {

constexpr int kReportVersion = 1;

double ratio(std::size_t num, std::size_t den, bool& undefined) {
  undefined = den == 0;
  return undefined ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::size_t slot_of(const std::vector<Emotion>& classes, Emotion e) {
  const auto it = std::find(classes.begin(), classes.end(), e);
  if (it == classes.end()) {
    throw DataError("label '" + std::string(to_string(e)) + "' is not in the report's class list");
  }
  return static_cast<std::size_t>(it - classes.begin());
}

std::string fixed4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::string pad_right(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string f;
  while (in >> f) out.push_back(f);
  return out;
}

std::size_t parse_count(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-') throw ParseError("bad count '" + s + "' in report");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<std::vector<double>> EvalReport::normalized_confusion() const {
  std::vector<std::vector<double>> out;
  for (const auto& row : confusion) {
    std::size_t sum = 0;
    for (auto v : row) sum += v;
    std::vector<double> r;
    for (auto v : row) r.push_back(sum == 0 ? 0.0 : static_cast<double>(v) / static_cast<double>(sum));
    out.push_back(std::move(r));
  }
  return out;
}

EvalReport report_from_confusion(std::vector<Emotion> classes, std::vector<std::vector<std::size_t>> confusion) {
  const std::size_t k = classes.size();
  if (k == 0) throw DataError("report needs at least one class");
  if (normalized_classes(classes) != classes) throw DataError("report classes must be distinct and in encoding order");
  if (confusion.size() != k) throw DataError("confusion matrix row count does not match classes");
  for (const auto& row : confusion) {
    if (row.size() != k) throw DataError("confusion matrix is not square");
  }
  EvalReport r;
  r.classes = std::move(classes);
  r.confusion = std::move(confusion);

  std::size_t trace = 0, tp_sum = 0, fp_sum = 0, fn_sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    ClassMetrics m;
    m.label = r.classes[i];
    const std::size_t tp = r.confusion[i][i];
    for (std::size_t j = 0; j < k; ++j) {
      m.support += r.confusion[i][j];
      m.predicted += r.confusion[j][i];
    }
    r.total += m.support;
    trace += tp;
    tp_sum += tp;
    fp_sum += m.predicted - tp;
    fn_sum += m.support - tp;
    m.precision = ratio(tp, m.predicted, m.precision_undefined);
    m.recall = ratio(tp, m.support, m.recall_undefined);
    const double denom = m.precision + m.recall;
    m.f1_undefined = denom == 0.0;
    m.f1 = m.f1_undefined ? 0.0 : 2.0 * m.precision * m.recall / denom;
    r.per_class.push_back(m);
  }
  if (r.total == 0) throw DataError("cannot score an empty evaluation set");

  bool unused = false;
  r.accuracy = ratio(trace, r.total, unused);
  double f1_sum = 0.0;
  for (const auto& m : r.per_class) f1_sum += m.f1;
  r.macro_f1 = f1_sum / static_cast<double>(k);
  const double micro_p = ratio(tp_sum, tp_sum + fp_sum, unused);
  const double micro_r = ratio(tp_sum, tp_sum + fn_sum, unused);
  r.micro_f1 = micro_p + micro_r == 0.0 ? 0.0 : 2.0 * micro_p * micro_r / (micro_p + micro_r);
  return r;
}

EvalReport score(std::span<const LabelPair> pairs, std::optional<std::vector<Emotion>> classes) {
  if (pairs.empty()) throw DataError("cannot score an empty evaluation set");
  std::vector<Emotion> labels;
  if (classes) {
    labels = normalized_classes(*classes);
  } else {
    for (const auto& [gold, pred] : pairs) {
      labels.push_back(gold);
      labels.push_back(pred);
    }
    labels = normalized_classes(std::move(labels));
  }
  std::vector<std::vector<std::size_t>> confusion(labels.size(), std::vector<std::size_t>(labels.size(), 0));
  for (const auto& [gold, pred] : pairs) ++confusion[slot_of(labels, gold)][slot_of(labels, pred)];
  return report_from_confusion(std::move(labels), std::move(confusion));
}

std::string_view to_string(ReportFormat format) noexcept {
  switch (format) {
    case ReportFormat::text: return "text";
    case ReportFormat::json: return "json";
    case ReportFormat::csv: return "csv";
  }
  return "?";
}

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw ParseError("unknown report format '" + std::string(name) + "' (expected text, json or csv)");
}

nlohmann::json report_to_json(const EvalReport& report) {
  nlohmann::json j;
  j["schema"] = "tweetemo-eval-report";
  j["version"] = kReportVersion;
  j["classes"] = nlohmann::json::array();
  for (auto c : report.classes) j["classes"].push_back(to_string(c));
  j["total"] = report.total;
  j["accuracy"] = report.accuracy;
  j["macro_f1"] = report.macro_f1;
  j["micro_f1"] = report.micro_f1;
  j["confusion"] = report.confusion;
  j["confusion_normalized"] = report.normalized_confusion();
  j["per_class"] = nlohmann::json::array();
  for (const auto& m : report.per_class) {
    j["per_class"].push_back({{"label", to_string(m.label)},
                              {"precision", m.precision},
                              {"recall", m.recall},
                              {"f1", m.f1},
                              {"support", m.support},
                              {"predicted", m.predicted},
                              {"precision_undefined", m.precision_undefined},
                              {"recall_undefined", m.recall_undefined},
                              {"f1_undefined", m.f1_undefined}});
  }
  j["provenance"] = report.provenance;
  return j;
}

EvalReport report_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<std::string>() != "tweetemo-eval-report") throw ParseError("not an evaluation report");
    if (j.at("version").get<int>() != kReportVersion) throw ParseError("unsupported report version");
    EvalReport r;
    for (const auto& c : j.at("classes")) r.classes.push_back(emotion_from_string(c.get<std::string>()));
    r.confusion = j.at("confusion").get<std::vector<std::vector<std::size_t>>>();
    r.total = j.at("total").get<std::size_t>();
    r.accuracy = j.at("accuracy").get<double>();
    r.macro_f1 = j.at("macro_f1").get<double>();
    r.micro_f1 = j.at("micro_f1").get<double>();
    for (const auto& m : j.at("per_class")) {
      ClassMetrics c;
      c.label = emotion_from_string(m.at("label").get<std::string>());
      c.precision = m.at("precision").get<double>();
      c.recall = m.at("recall").get<double>();
      c.f1 = m.at("f1").get<double>();
      c.support = m.at("support").get<std::size_t>();
      c.predicted = m.at("predicted").get<std::size_t>();
      c.precision_undefined = m.at("precision_undefined").get<bool>();
      c.recall_undefined = m.at("recall_undefined").get<bool>();
      c.f1_undefined = m.at("f1_undefined").get<bool>();
      r.per_class.push_back(c);
    }
    if (r.per_class.size() != r.classes.size() || r.confusion.size() != r.classes.size()) {
      throw ParseError("report sections disagree on the class count");
    }
    r.provenance = j.value("provenance", nlohmann::json::object());
    return r;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed report: ") + ex.what());
  }
}

namespace {

std::string render_text(const EvalReport& r) {
  constexpr std::size_t kLead = 11;
  constexpr std::size_t kCol = 10;
  bool any_undefined = false;
  auto cell = [&](double v, bool undefined) {
    any_undefined = any_undefined || undefined;
    return pad(fixed4(v) + (undefined ? "*" : " "), kCol);
  };

  std::string out = pad_right("", kLead);
  for (auto c : r.classes) out += pad(std::string(to_string(c)) + " ", kCol);
  out += "\n" + pad_right("precision", kLead);
  for (const auto& m : r.per_class) out += cell(m.precision, m.precision_undefined);
  out += "\n" + pad_right("recall", kLead);
  for (const auto& m : r.per_class) out += cell(m.recall, m.recall_undefined);
  out += "\n" + pad_right("f1-score", kLead);
  for (const auto& m : r.per_class) out += cell(m.f1, m.f1_undefined);
  out += "\n" + pad_right("support", kLead);
  for (const auto& m : r.per_class) out += pad(std::to_string(m.support) + " ", kCol);
  out += "\n\n";
  out += pad_right("accuracy", kLead) + fixed4(r.accuracy) + "  (" + std::to_string(r.total) + " tweets)\n";
  out += pad_right("macro-f1", kLead) + fixed4(r.macro_f1) + "\n";
  out += pad_right("micro-f1", kLead) + fixed4(r.micro_f1) + "\n";
  if (any_undefined) out += "* zero denominator, reported as 0\n";

  out += "\nconfusion matrix (rows = gold, columns = predicted)\n";
  out += pad_right("", kLead);
  for (auto c : r.classes) out += pad(std::string(to_string(c)), kCol);
  out += "\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    out += pad_right(std::string(to_string(r.classes[i])), kLead);
    for (auto v : r.confusion[i]) out += pad(std::to_string(v), kCol);
    out += "\n";
  }
  return out;
}

std::string render_csv(const EvalReport& r) {
  std::string out = "gold\\predicted";
  for (auto c : r.classes) out += "," + std::string(to_string(c));
  out += "\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    out += to_string(r.classes[i]);
    for (auto v : r.confusion[i]) out += "," + std::to_string(v);
    out += "\n";
  }
  return out;
}

EvalReport parse_text(std::string_view doc) {
  std::istringstream in{std::string(doc)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("confusion matrix", 0) == 0) break;
  }
  if (!in) throw ParseError("text report has no confusion matrix section");
  if (!std::getline(in, line)) throw ParseError("text report: missing confusion header");
  std::vector<Emotion> classes;
  for (const auto& f : split_fields(line)) classes.push_back(emotion_from_string(f));
  std::vector<std::vector<std::size_t>> confusion;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!std::getline(in, line)) throw ParseError("text report: truncated confusion matrix");
    const auto fields = split_fields(line);
    if (fields.size() != classes.size() + 1 || emotion_from_string(fields[0]) != classes[i]) {
      throw ParseError("text report: malformed confusion row '" + line + "'");
    }
    std::vector<std::size_t> row;
    for (std::size_t k = 1; k < fields.size(); ++k) row.push_back(parse_count(fields[k]));
    confusion.push_back(std::move(row));
  }
  return report_from_confusion(std::move(classes), std::move(confusion));
}

EvalReport parse_csv_report(std::string_view doc) {
  const auto rows = parse_csv(doc);
  if (rows.empty()) throw ParseError("empty CSV report");
  std::vector<Emotion> classes;
  for (std::size_t k = 1; k < rows[0].size(); ++k) classes.push_back(emotion_from_string(rows[0][k]));
  if (rows.size() != classes.size() + 1) throw ParseError("CSV report: row count does not match header");
  std::vector<std::vector<std::size_t>> confusion;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& fields = rows[i + 1];
    if (fields.size() != classes.size() + 1 || emotion_from_string(fields[0]) != classes[i]) {
      throw ParseError("CSV report: malformed row " + std::to_string(i + 2));
    }
    std::vector<std::size_t> row;
    for (std::size_t k = 1; k < fields.size(); ++k) row.push_back(parse_count(fields[k]));
    confusion.push_back(std::move(row));
  }
  return report_from_confusion(std::move(classes), std::move(confusion));
}

}  // namespace

std::string render(const EvalReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return render_text(report);
    case ReportFormat::json: return report_to_json(report).dump(2) + "\n";
    case ReportFormat::csv: return render_csv(report);
  }
  return {};
}

EvalReport parse_report(std::string_view document, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: return parse_text(document);
    case ReportFormat::csv: return parse_csv_report(document);
    case ReportFormat::json:
      try {
        return report_from_json(nlohmann::json::parse(document));
      } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("report is not valid JSON: ") + ex.what());
      }
  }
  throw ParseError("unknown report format");
}

}  // namespace tweetemo
