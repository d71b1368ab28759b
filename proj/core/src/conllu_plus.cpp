// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "nerkit/conllu_plus.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <vector>

#include "nerkit/error.hpp"

namespace nerkit {

namespace {

constexpr std::string_view kGlobalColumns = "global.columns";

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
}

// Multiword ranges look like "3-4", empty nodes like "5.1".
bool is_range_id(std::string_view id) {
  const std::size_t dash = id.find('-');
  return dash != std::string_view::npos && all_digits(id.substr(0, dash)) &&
         all_digits(id.substr(dash + 1));
}

bool is_empty_node_id(std::string_view id) {
  const std::size_t dot = id.find('.');
  return dot != std::string_view::npos && all_digits(id.substr(0, dot)) &&
         all_digits(id.substr(dot + 1));
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string field;
  while (is >> field) out.push_back(field);
  return out;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = line.find('\t', begin);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(begin));
      return fields;
    }
    fields.push_back(line.substr(begin, end - begin));
    begin = end + 1;
  }
}

}  // namespace

Split read_conllu_plus(std::istream& in, const ColumnSpec& spec, Scheme scheme) {
  std::string line;
  std::size_t line_no = 0;

  // Locate the global.columns header on the first non-empty line.
  std::vector<std::string> columns;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t pos = line.find(kGlobalColumns);
    if (line[0] != '#' || pos == std::string::npos) {
      throw MissingGlobalColumns("first non-empty line is not a \"# global.columns\" header");
    }
    std::size_t value = line.find('=', pos);
    if (value == std::string::npos) {
      throw MissingGlobalColumns("global.columns header has no \"=\"");
    }
    columns = split_ws(std::string_view(line).substr(value + 1));
    break;
  }
  if (columns.empty()) {
    throw MissingGlobalColumns("no global.columns header found");
  }

  const auto column_index = [&](std::string_view name) -> std::optional<std::size_t> {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) return std::nullopt;
    return static_cast<std::size_t>(it - columns.begin());
  };

  const auto ner = column_index(spec.ner_column_name);
  if (!ner) {
    throw UnknownNerColumn("column \"" + spec.ner_column_name +
                           "\" not listed in global.columns");
  }
  const auto form = column_index("FORM");
  if (!form) {
    throw ParseError("global.columns lists no FORM column");
  }
  const auto id = column_index("ID");

  Split split;
  TaggedSentence sentence;
  const auto flush = [&] {
    if (!sentence.tokens.empty()) {
      split.push_back(std::move(sentence));
      sentence = TaggedSentence{};
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (id && *id < fields.size()) {
      const std::string_view row_id = fields[*id];
      if (is_range_id(row_id) || is_empty_node_id(row_id)) continue;
    }
    if (*form >= fields.size() || fields[*form].empty()) {
      throw ParseError("line " + std::to_string(line_no) + ": missing FORM field");
    }
    sentence.tokens.emplace_back(fields[*form]);

    Label label = Label::outside();
    if (*ner < fields.size()) {
      const std::string_view value = fields[*ner];
      if (!value.empty() && value != "_" && value != "*") {
        try {
          label = parse_label(normalize_label(value), scheme);
        } catch (const MalformedLabel& e) {
          throw MalformedLabel("line " + std::to_string(line_no) + ": " + e.what());
        }
      }
    }
    sentence.labels.push_back(std::move(label));
  }
  flush();
  return split;
}

}  // namespace nerkit
