// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <benchmark/benchmark.h>

#include "nerkit/score.hpp"

using namespace nerkit;

namespace {

Split make_split(std::size_t sentences, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<std::string> types = {"PER", "LOC", "ORG"};
  std::uniform_int_distribution<std::size_t> type_of(0, types.size() - 1);
  std::uniform_int_distribution<int> coin(0, 99);
  std::uniform_int_distribution<std::size_t> length_of(5, 40);

  Split split;
  std::mt19937 shape_rng(17);  // same shapes for gold and predictions
  for (std::size_t s = 0; s < sentences; ++s) {
    TaggedSentence sentence;
    const std::size_t n = length_of(shape_rng);
    for (std::size_t i = 0; i < n; ++i) {
      sentence.tokens.push_back("tok");
      const bool open = !sentence.labels.empty() && !sentence.labels.back().is_outside();
      if (open && coin(rng) < 40) {
        sentence.labels.push_back(Label::tagged(Prefix::I, sentence.labels.back().type()));
      } else if (coin(rng) < 40) {
        sentence.labels.push_back(Label::tagged(Prefix::B, types[type_of(rng)]));
      } else {
        sentence.labels.push_back(Label::outside());
      }
    }
    split.push_back(std::move(sentence));
  }
  return split;
}

void BM_Score(benchmark::State& state) {
  const Split gold = make_split(2000, 1);
  const Split predicted = make_split(2000, 2);
  for (auto _ : state) {
    const ScoreReport report = score(gold, predicted);
    benchmark::DoNotOptimize(report.micro.f1);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * 2000);
}
BENCHMARK(BM_Score);

}  // namespace

BENCHMARK_MAIN();
