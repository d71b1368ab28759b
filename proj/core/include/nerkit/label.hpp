// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_LABEL_HPP
#define NERKIT_LABEL_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nerkit/error.hpp"

namespace nerkit {

/// Chunk encoding schemes. Each scheme admits a subset of boundary prefixes:
/// IO admits {I}, IOB1 and BIO admit {B, I}, BIOES admits {B, I, E, S}.
enum class Scheme { IO, IOB1, BIO, BIOES };

/// Boundary prefix of a non-outside label.
enum class Prefix : char { B = 'B', I = 'I', E = 'E', S = 'S' };

char to_char(Prefix p);
std::string to_string(Scheme s);
Scheme scheme_from_string(std::string_view name);
bool admits(Scheme scheme, Prefix prefix);

/// Per-token annotation: either the OUTSIDE sentinel or a (prefix, type) pair.
/// Immutable value; entity types are case-sensitive and may contain dashes.
class Label {
 public:
  Label() : outside_(true), prefix_(Prefix::I) {}

  static Label outside() { return Label(); }

  /// Throws MalformedLabel if the type is empty or contains whitespace.
  static Label tagged(Prefix prefix, std::string entity_type);

  bool is_outside() const { return outside_; }
  Prefix prefix() const { return prefix_; }
  const std::string& type() const { return type_; }

  /// Same label with a different prefix; outside labels are returned as-is.
  Label with_prefix(Prefix p) const;

  /// Textual form: "O" or "P-TYPE" with an uppercase prefix letter.
  std::string to_string() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;

 private:
  bool outside_;
  Prefix prefix_;
  std::string type_;
};

/// Parses "O" or "P-TYPE" where P must be admissible under the scheme and the
/// first dash separates prefix from type (types may themselves contain
/// dashes, e.g. GPE-LOC). Throws MalformedLabel otherwise.
Label parse_label(std::string_view raw, Scheme scheme);

/// Best-effort dash insertion for prefix-glued labels (BNEO -> B-NEO).
/// Leaves "O", already-dashed labels, and anything unrecognized unchanged.
/// Idempotent; residual malformations are reported by parse_label.
std::string normalize_label(std::string_view raw);

/// A typed token span: [start, end) token ordinals within one sentence.
struct Mention {
  std::size_t sentence_index = 0;
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  std::string entity_type;

  friend bool operator==(const Mention&, const Mention&) = default;
  friend auto operator<=>(const Mention&, const Mention&) = default;
};

/// Tokens with aligned labels. Tokens are never empty and contain no line
/// breaks; tokens.size() == labels.size() always holds for reader output.
struct TaggedSentence {
  std::vector<std::string> tokens;
  std::vector<Label> labels;
  std::map<std::string, std::string> metadata;

  std::size_t size() const { return tokens.size(); }

  friend bool operator==(const TaggedSentence&, const TaggedSentence&) = default;
};

using Split = std::vector<TaggedSentence>;

/// Corpus: named splits (train/dev/test or custom) of tagged sentences.
/// A split may be empty. Ordered by split name for deterministic iteration.
struct Corpus {
  std::map<std::string, Split> splits;
  std::string provenance;
};

}  // namespace nerkit

#endif  // NERKIT_LABEL_HPP
