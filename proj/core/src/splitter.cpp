// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "nerkit/splitter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nerkit/error.hpp"

namespace nerkit {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
  std::vector<std::uint64_t> keys(n);
  std::uint64_t state = seed;
  for (std::size_t i = 0; i < n; ++i) keys[i] = splitmix64(state);
  std::vector<std::size_t> indices(n);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  std::sort(indices.begin(), indices.end(), [&](std::size_t a, std::size_t b) {
    return keys[a] != keys[b] ? keys[a] < keys[b] : a < b;
  });
  return indices;
}

SplitResult split_corpus(const Split& sentences, const SplitRatios& ratios,
                         std::uint64_t seed) {
  if (sentences.empty()) throw EmptyInput("nothing to split");
  if (ratios.train <= 0.0 || ratios.dev <= 0.0 || ratios.test <= 0.0) {
    throw BadRatios("ratios must be positive");
  }
  const double sum = ratios.train + ratios.dev + ratios.test;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw BadRatios("ratios sum to " + std::to_string(sum) + ", want 1");
  }

  const std::size_t n = sentences.size();
  const auto indices = shuffled_indices(n, seed);
  // The epsilon absorbs representation error in ratios like 1/3.
  const auto n_train = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * ratios.train + 1e-9));
  const auto n_dev = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * ratios.dev + 1e-9));

  SplitResult result;
  for (std::size_t i = 0; i < n; ++i) {
    const TaggedSentence& s = sentences[indices[i]];
    if (i < n_train) {
      result.train.push_back(s);
    } else if (i < n_train + n_dev) {
      result.dev.push_back(s);
    } else {
      result.test.push_back(s);
    }
  }
  return result;
}

}  // namespace nerkit
