// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_SPLITTER_HPP
#define NERKIT_SPLITTER_HPP

#include <cstdint>
#include <vector>

#include "nerkit/label.hpp"

namespace nerkit {

/// Fractions of sentences assigned to each output split. All three must be
/// positive and sum to 1 (within 1e-9).
struct SplitRatios {
  double train = 0.8;
  double dev = 0.1;
  double test = 0.1;
};

struct SplitResult {
  Split train;
  Split dev;
  Split test;
};

/// Deterministic shuffle-then-partition. The shuffle orders sentence indices
/// by a SplitMix64 stream seeded with `seed` (one output per index), so the
/// same seed reproduces the same assignment on every platform. Sizes are
/// floor(n * train) and floor(n * dev); the remainder goes to test.
SplitResult split_corpus(const Split& sentences, const SplitRatios& ratios,
                         std::uint64_t seed);

/// The raw index permutation behind split_corpus; depends only on n and seed.
std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed);

}  // namespace nerkit

#endif  // NERKIT_SPLITTER_HPP
