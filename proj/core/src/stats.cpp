// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "nerkit/stats.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "nerkit/codec.hpp"

namespace nerkit {

std::size_t SplitStats::mention_total() const {
  std::size_t n = 0;
  for (const auto& [type, count] : mention_counts) n += count;
  return n;
}

CorpusStats corpus_stats(const Corpus& corpus, Scheme scheme) {
  CorpusStats stats;
  for (const auto& [name, split] : corpus.splits) {
    SplitStats s;
    s.sentence_count = split.size();
    for (const TaggedSentence& sentence : split) {
      s.token_count += sentence.tokens.size();
    }
    for (const Mention& m : decode_split(split, scheme)) {
      ++s.mention_counts[m.entity_type];
    }
    stats.totals.sentence_count += s.sentence_count;
    stats.totals.token_count += s.token_count;
    for (const auto& [type, count] : s.mention_counts) {
      stats.totals.mention_counts[type] += count;
    }
    stats.per_split.emplace(name, std::move(s));
  }
  return stats;
}

std::string format_stats_text(const CorpusStats& stats) {
  std::ostringstream os;
  char buf[256];
  os << "split        sentences     tokens   mentions\n";
  const auto row = [&](const std::string& name, const SplitStats& s) {
    std::snprintf(buf, sizeof(buf), "%-12s %9zu %10zu %10zu\n", name.c_str(),
                  s.sentence_count, s.token_count, s.mention_total());
    os << buf;
  };
  for (const auto& [name, s] : stats.per_split) row(name, s);
  row("total", stats.totals);
  if (!stats.totals.mention_counts.empty()) {
    os << "\nentity type counts (all splits)\n";
    for (const auto& [type, count] : stats.totals.mention_counts) {
      std::snprintf(buf, sizeof(buf), "%-17s %9zu\n", type.c_str(), count);
      os << buf;
    }
  }
  return os.str();
}

std::string stats_to_json(const CorpusStats& stats) {
  nlohmann::json doc;
  const auto split_json = [](const SplitStats& s) {
    return nlohmann::json{{"sentences", s.sentence_count},
                          {"tokens", s.token_count},
                          {"mentions", s.mention_counts},
                          {"mention_total", s.mention_total()}};
  };
  doc["splits"] = nlohmann::json::object();
  for (const auto& [name, s] : stats.per_split) doc["splits"][name] = split_json(s);
  doc["totals"] = split_json(stats.totals);
  return doc.dump(2);
}

}  // namespace nerkit
