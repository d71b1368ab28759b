// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "nerkit/json_records.hpp"

#include <cctype>
#include <istream>

#include <json.hpp>

#include "nerkit/error.hpp"

namespace nerkit {

namespace {

using nlohmann::json;

TaggedSentence record_to_sentence(const json& record, const JsonRecordSpec& spec,
                                  Scheme scheme, std::size_t index) {
  const std::string where = "record " + std::to_string(index);
  if (!record.is_object()) {
    throw ParseError(where + ": expected a JSON object");
  }
  if (!record.contains(spec.tokens_field)) {
    throw FieldMissing(where + ": no \"" + spec.tokens_field + "\" field");
  }
  if (!record.contains(spec.labels_field)) {
    throw FieldMissing(where + ": no \"" + spec.labels_field + "\" field");
  }
  const json& tokens = record[spec.tokens_field];
  const json& labels = record[spec.labels_field];
  if (!tokens.is_array() || !labels.is_array()) {
    throw ParseError(where + ": token and label fields must be arrays");
  }
  if (tokens.size() != labels.size()) {
    throw LengthMismatch(where + ": " + std::to_string(tokens.size()) +
                         " tokens vs " + std::to_string(labels.size()) + " labels");
  }
  TaggedSentence sentence;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].is_string() || !labels[i].is_string()) {
      throw ParseError(where + ": tokens and labels must be strings");
    }
    const std::string token = tokens[i].get<std::string>();
    if (token.empty() || token.find('\n') != std::string::npos) {
      throw ParseError(where + ": empty token or token with a line break");
    }
    sentence.tokens.push_back(token);
    try {
      sentence.labels.push_back(
          parse_label(normalize_label(labels[i].get<std::string>()), scheme));
    } catch (const MalformedLabel& e) {
      throw MalformedLabel(where + ": " + e.what());
    }
  }
  return sentence;
}

}  // namespace

Split read_json_records(std::istream& in, const JsonRecordSpec& spec, Scheme scheme) {
  if (spec.tokens_field.empty() || spec.labels_field.empty()) {
    throw Error("JSON record spec needs non-empty field names");
  }
  // Peek past whitespace: '[' means one array, anything else is ND-JSON.
  char first = 0;
  while (in.get(first)) {
    if (!std::isspace(static_cast<unsigned char>(first))) break;
  }
  if (!in) return {};
  in.putback(first);

  Split split;
  if (first == '[') {
    json root;
    try {
      root = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("JSON parse error: ") + e.what());
    }
    for (std::size_t i = 0; i < root.size(); ++i) {
      split.push_back(record_to_sentence(root[i], spec, scheme, i));
    }
    return split;
  }

  std::string line;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      throw ParseError("record " + std::to_string(index) + ": " + e.what());
    }
    split.push_back(record_to_sentence(record, spec, scheme, index));
    ++index;
  }
  return split;
}

}  // namespace nerkit
