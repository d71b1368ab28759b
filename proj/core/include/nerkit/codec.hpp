// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_CODEC_HPP
#define NERKIT_CODEC_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nerkit/label.hpp"

namespace nerkit {

enum class ViolationKind {
  IllegalStart,
  TypeMismatchContinuation,
  IllegalPrefixTransition,
  UnterminatedChunk,
};

std::string to_string(ViolationKind k);

/// One illegal label transition. `prior` is empty at sentence start. For
/// UnterminatedChunk the token index is the sentence's last token.
struct Violation {
  std::size_t sentence_index = 0;
  std::size_t token_index = 0;
  std::optional<Label> prior;
  Label current;
  ViolationKind kind = ViolationKind::IllegalStart;

  friend bool operator==(const Violation&, const Violation&) = default;
};

enum class RepairStrategy { ConllevalStyle, Discard, None };

std::string to_string(RepairStrategy s);
RepairStrategy repair_strategy_from_string(std::string_view name);

/// Checks label-transition legality under the scheme. Violations are data,
/// not failures: the result is empty iff the sequence is a legal encoding.
std::vector<Violation> validate(std::span<const Label> labels, Scheme scheme,
                                std::size_t sentence_index = 0);

/// Violations across a whole split, with sentence indices filled in.
std::vector<Violation> validate_split(const Split& split, Scheme scheme);

/// Rewrites the sequence so that validate(result, scheme) is empty.
/// ConllevalStyle converts illegally placed continuations into chunk starts
/// (BIOES input is routed through BIO: E->I, S->B, repair, re-encode);
/// Discard moves every token of an invalid chunk to OUTSIDE; None requires
/// the input to already be clean and throws UnrepairedViolations otherwise.
std::vector<Label> repair(std::span<const Label> labels, Scheme scheme,
                          RepairStrategy strategy);

/// Extracts mentions from a valid sequence, left to right.
/// Throws InvalidSequence if the input does not validate clean.
std::vector<Mention> decode(std::span<const Label> labels, Scheme scheme,
                            std::size_t sentence_index = 0);

/// Inverse of decode. Mentions must lie within [0, length) and must not
/// overlap; they may be given in any order. Under IO, adjacent same-type
/// mentions merge into one run (documented lossy case).
std::vector<Label> encode(std::span<const Mention> mentions, std::size_t length,
                          Scheme scheme);

/// encode(decode(labels, from), length, to).
std::vector<Label> convert(std::span<const Label> labels, Scheme from, Scheme to);

/// Selects one annotation layer from a nested (multi-layer) sentence.
/// Layer 0 is the outermost layer. All layers must have equal length.
std::vector<Label> flatten_nested(const std::vector<std::vector<Label>>& layers,
                                  std::size_t layer_index = 0);

/// All mentions of a split; sentence indices follow split order.
std::vector<Mention> decode_split(const Split& split, Scheme scheme);

/// Tab-separated report, one violation per line:
/// sentence, token, kind, prior ("^" at sentence start), current.
std::string format_violations_tsv(std::span<const Violation> violations);

/// The same report as a JSON array (prior is null at sentence start).
std::string violations_to_json(std::span<const Violation> violations);

}  // namespace nerkit

#endif  // NERKIT_CODEC_HPP
