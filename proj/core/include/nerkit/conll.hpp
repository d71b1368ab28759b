// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_CONLL_HPP
#define NERKIT_CONLL_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "nerkit/label.hpp"

namespace nerkit {

/// Field separation. AnyWhitespace splits on runs of spaces/tabs and is the
/// read default; writes always use an explicit single character.
enum class FieldDelimiter { AnyWhitespace, SingleSpace, Tab };

struct ConllConfig {
  std::size_t token_column = 0;
  std::optional<std::size_t> label_column;  // nullopt selects the last column
  FieldDelimiter field_delimiter = FieldDelimiter::AnyWhitespace;
  std::optional<std::string> comment_prefix;
  bool keep_docstart = false;

  // When set, every column right of the token holds one annotation layer and
  // this selects the layer to keep (0 = leftmost = outermost).
  std::optional<std::size_t> nested_layer;

  // Prefix letter prepended to bare type-name labels before parsing, for
  // corpora annotated with just the type (e.g. "I" turns LOC into I-LOC).
  std::optional<std::string> label_prepend;
};

/// Reads one-token-per-line text with blank-line sentence boundaries.
/// Consecutive blank lines collapse; a trailing unterminated sentence is
/// flushed. Labels go through normalize_label before parse_label.
Split read_conll(std::istream& in, const ConllConfig& cfg, Scheme scheme);

/// Writes "token<delim>label" lines, a blank line after every sentence, UTF-8
/// with LF newlines. Every sentence must validate clean under `scheme`
/// (InvalidSequence otherwise). Write delimiter defaults to a single space.
void write_conll(const Split& split, const ConllConfig& cfg, std::ostream& out,
                 Scheme scheme = Scheme::BIO);

std::string write_conll_string(const Split& split, const ConllConfig& cfg,
                               Scheme scheme = Scheme::BIO);

/// Removes lines that carry only a label and no token (single field that is
/// "O" or a prefix-dash-type form). Returns the filtered text and the number
/// of removed lines; all other lines pass through byte-identical.
std::pair<std::string, std::size_t> drop_tokenless_lines(std::string_view text);

struct SentenceIdConfig {
  std::size_t id_column = 0;
  std::size_t token_column = 1;
  std::optional<std::size_t> label_column;  // nullopt selects the last column
  FieldDelimiter field_delimiter = FieldDelimiter::AnyWhitespace;
};

/// Reads tabular text where a sentence-id column delineates sentences: a new
/// sentence begins whenever the id differs from the previous line's id. The
/// id is kept as sentence metadata under "sentence_id".
Split read_sentence_id_delimited(std::istream& in, const SentenceIdConfig& cfg,
                                 Scheme scheme);

}  // namespace nerkit

#endif  // NERKIT_CONLL_HPP
