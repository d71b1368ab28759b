// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_SCORE_HPP
#define NERKIT_SCORE_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>

#include "nerkit/label.hpp"

namespace nerkit {

/// Chunk counts and derived percentages for one entity type (or pooled).
/// precision = correct/predicted, recall = correct/gold, f1 = 2PR/(P+R);
/// each is 0 when its denominator is 0. Values are percentages (0..100).
struct TypeScore {
  std::size_t gold_count = 0;
  std::size_t predicted_count = 0;
  std::size_t correct_count = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct ScoreReport {
  std::map<std::string, TypeScore> per_type;
  TypeScore micro;  // pooled counts across all types
};

/// Span-exact scoring: a predicted mention is correct iff a gold mention with
/// the same (sentence, start, end, type) exists. Both sides must be valid BIO
/// with identical sentence and per-sentence token counts.
ScoreReport score(const Split& gold, const Split& predicted);

/// Overall line plus one line per type, percentages to two decimals.
std::string format_score_text(const ScoreReport& report);

/// Machine-readable report with full-precision fields.
std::string score_to_json(const ScoreReport& report);
ScoreReport score_report_from_json(std::istream& in);

/// Mean and standard error (sample stddev / sqrt(n)) over per-run values,
/// e.g. micro F1 across seeds. n = 1 yields a standard error of 0.
struct Aggregate {
  double mean = 0.0;
  double standard_error = 0.0;
  std::size_t count = 0;
};

Aggregate aggregate_values(std::span<const double> values);

}  // namespace nerkit

#endif  // NERKIT_SCORE_HPP
