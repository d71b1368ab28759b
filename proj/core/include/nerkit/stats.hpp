// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_STATS_HPP
#define NERKIT_STATS_HPP

#include <cstddef>
#include <map>
#include <string>

#include "nerkit/label.hpp"

namespace nerkit {

struct SplitStats {
  std::size_t sentence_count = 0;
  std::size_t token_count = 0;
  std::map<std::string, std::size_t> mention_counts;  // per entity type

  std::size_t mention_total() const;
};

/// Per-split counts plus totals; totals always equal the split sums.
struct CorpusStats {
  std::map<std::string, SplitStats> per_split;
  SplitStats totals;
};

CorpusStats corpus_stats(const Corpus& corpus, Scheme scheme = Scheme::BIO);

std::string format_stats_text(const CorpusStats& stats);
std::string stats_to_json(const CorpusStats& stats);

}  // namespace nerkit

#endif  // NERKIT_STATS_HPP
