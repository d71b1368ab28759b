// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_JSON_RECORDS_HPP
#define NERKIT_JSON_RECORDS_HPP

#include <iosfwd>
#include <string>

#include "nerkit/label.hpp"

namespace nerkit {

/// Field names of the token and label arrays inside each JSON record.
struct JsonRecordSpec {
  std::string tokens_field = "tokens";
  std::string labels_field = "ner_tags";
};

/// Reads a JSON array of objects or newline-delimited JSON objects; each
/// record yields one sentence. The token and label arrays must be string
/// arrays of equal length (LengthMismatch carries the record index).
Split read_json_records(std::istream& in, const JsonRecordSpec& spec, Scheme scheme);

}  // namespace nerkit

#endif  // NERKIT_JSON_RECORDS_HPP
