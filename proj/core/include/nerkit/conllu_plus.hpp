// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_CONLLU_PLUS_HPP
#define NERKIT_CONLLU_PLUS_HPP

#include <iosfwd>
#include <string>

#include "nerkit/label.hpp"

namespace nerkit {

/// Names the column of a CoNLL-U Plus file that carries the entity labels.
/// The column set itself comes from the file's "# global.columns" header.
struct ColumnSpec {
  std::string ner_column_name;
};

/// Reads CoNLL-U Plus: tab-separated columns declared by a leading
/// "# global.columns = ..." line. Comment lines are skipped; multiword-range
/// rows (ID "3-4") and empty-node rows (ID "5.1") are skipped. A token whose
/// NER field is absent, "_", or "*" receives OUTSIDE (the format leaves O
/// tags implicit); all other values are normalized and parsed under `scheme`.
Split read_conllu_plus(std::istream& in, const ColumnSpec& spec, Scheme scheme);

}  // namespace nerkit

#endif  // NERKIT_CONLLU_PLUS_HPP
