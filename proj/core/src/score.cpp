// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "nerkit/score.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "nerkit/codec.hpp"
#include "nerkit/error.hpp"

namespace nerkit {

namespace {

void fill_ratios(TypeScore& t) {
  t.precision = t.predicted_count == 0
                    ? 0.0
                    : 100.0 * static_cast<double>(t.correct_count) /
                          static_cast<double>(t.predicted_count);
  t.recall = t.gold_count == 0 ? 0.0
                               : 100.0 * static_cast<double>(t.correct_count) /
                                     static_cast<double>(t.gold_count);
  t.f1 = (t.precision + t.recall) == 0.0
             ? 0.0
             : 2.0 * t.precision * t.recall / (t.precision + t.recall);
}

}  // namespace

ScoreReport score(const Split& gold, const Split& predicted) {
  if (gold.size() != predicted.size()) {
    throw SentenceCountMismatch("gold has " + std::to_string(gold.size()) +
                                " sentences, predicted has " +
                                std::to_string(predicted.size()));
  }
  for (std::size_t s = 0; s < gold.size(); ++s) {
    if (gold[s].tokens.size() != predicted[s].tokens.size()) {
      throw TokenCountMismatch("sentence " + std::to_string(s) + ": gold has " +
                               std::to_string(gold[s].tokens.size()) +
                               " tokens, predicted has " +
                               std::to_string(predicted[s].tokens.size()));
    }
  }

  const auto gold_mentions = decode_split(gold, Scheme::BIO);
  const auto pred_mentions = decode_split(predicted, Scheme::BIO);
  const std::set<Mention> gold_set(gold_mentions.begin(), gold_mentions.end());

  ScoreReport report;
  for (const Mention& m : gold_mentions) {
    ++report.per_type[m.entity_type].gold_count;
    ++report.micro.gold_count;
  }
  for (const Mention& m : pred_mentions) {
    TypeScore& t = report.per_type[m.entity_type];
    ++t.predicted_count;
    ++report.micro.predicted_count;
    // Valid sequences cannot repeat a span, so set lookup is exact matching.
    if (gold_set.contains(m)) {
      ++t.correct_count;
      ++report.micro.correct_count;
    }
  }
  for (auto& [type, t] : report.per_type) fill_ratios(t);
  fill_ratios(report.micro);
  return report;
}

std::string format_score_text(const ScoreReport& report) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "processed %zu phrases; found: %zu phrases; correct: %zu.\n",
                report.micro.gold_count, report.micro.predicted_count,
                report.micro.correct_count);
  os << buf;
  std::snprintf(buf, sizeof(buf),
                "precision: %6.2f%%; recall: %6.2f%%; FB1: %6.2f\n",
                report.micro.precision, report.micro.recall, report.micro.f1);
  os << buf;
  for (const auto& [type, t] : report.per_type) {
    std::snprintf(buf, sizeof(buf),
                  "%17s: precision: %6.2f%%; recall: %6.2f%%; FB1: %6.2f  %zu\n",
                  type.c_str(), t.precision, t.recall, t.f1, t.predicted_count);
    os << buf;
  }
  return os.str();
}

namespace {

nlohmann::json type_score_to_json(const TypeScore& t) {
  return nlohmann::json{{"gold", t.gold_count},
                        {"predicted", t.predicted_count},
                        {"correct", t.correct_count},
                        {"precision", t.precision},
                        {"recall", t.recall},
                        {"f1", t.f1}};
}

TypeScore type_score_from_json(const nlohmann::json& j) {
  TypeScore t;
  t.gold_count = j.at("gold").get<std::size_t>();
  t.predicted_count = j.at("predicted").get<std::size_t>();
  t.correct_count = j.at("correct").get<std::size_t>();
  t.precision = j.at("precision").get<double>();
  t.recall = j.at("recall").get<double>();
  t.f1 = j.at("f1").get<double>();
  return t;
}

}  // namespace

std::string score_to_json(const ScoreReport& report) {
  nlohmann::json doc;
  doc["micro"] = type_score_to_json(report.micro);
  doc["per_type"] = nlohmann::json::object();
  for (const auto& [type, t] : report.per_type) {
    doc["per_type"][type] = type_score_to_json(t);
  }
  return doc.dump(2);
}

ScoreReport score_report_from_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("score report: ") + e.what());
  }
  ScoreReport report;
  try {
    report.micro = type_score_from_json(doc.at("micro"));
    for (const auto& [type, t] : doc.at("per_type").items()) {
      report.per_type[type] = type_score_from_json(t);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("score report: ") + e.what());
  }
  return report;
}

Aggregate aggregate_values(std::span<const double> values) {
  if (values.empty()) throw EmptyInput("no values to aggregate");
  Aggregate a;
  a.count = values.size();
  double sum = 0.0;
  for (double v : values) sum += v;
  a.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - a.mean) * (v - a.mean);
    const double variance = ss / static_cast<double>(values.size() - 1);
    a.standard_error = std::sqrt(variance / static_cast<double>(values.size()));
  }
  return a;
}

}  // namespace nerkit
