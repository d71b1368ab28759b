// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "nerkit/conll.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "nerkit/codec.hpp"
#include "nerkit/error.hpp"

namespace nerkit {

namespace {

constexpr std::string_view kDocstart = "-DOCSTART-";

bool is_prefix_letter(char c) {
  return c == 'B' || c == 'I' || c == 'E' || c == 'S';
}

// "O" or an explicit prefix-dash-type form; used to spot label-only lines.
bool looks_like_label(std::string_view s) {
  if (s == "O") return true;
  return s.size() >= 3 && is_prefix_letter(s[0]) && s[1] == '-';
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::vector<std::string_view> split_fields(std::string_view line, FieldDelimiter d) {
  std::vector<std::string_view> fields;
  if (d == FieldDelimiter::AnyWhitespace) {
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      const std::size_t begin = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > begin) fields.push_back(line.substr(begin, i - begin));
    }
    return fields;
  }
  const char sep = d == FieldDelimiter::Tab ? '\t' : ' ';
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = line.find(sep, begin);
    if (end == std::string_view::npos) {
      fields.push_back(line.substr(begin));
      return fields;
    }
    fields.push_back(line.substr(begin, end - begin));
    begin = end + 1;
  }
}

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

char write_delimiter(const ConllConfig& cfg) {
  return cfg.field_delimiter == FieldDelimiter::Tab ? '\t' : ' ';
}

// Shared label text pipeline: optional bare-type prepend, then dash
// normalization, then the scheme-checked parse.
Label parse_label_text(std::string_view raw, const std::optional<std::string>& prepend,
                       Scheme scheme, std::size_t line_no) {
  std::string text(raw);
  if (prepend && text != "O" && !looks_like_label(text)) {
    text = *prepend + "-" + text;
  }
  const std::string normalized = normalize_label(text);
  try {
    return parse_label(normalized, scheme);
  } catch (const MalformedLabel& e) {
    std::string detail = e.what();
    if (normalized != raw) detail += " (from \"" + std::string(raw) + "\")";
    throw MalformedLabel("line " + std::to_string(line_no) + ": " + detail);
  }
}

class ConllReader {
 public:
  ConllReader(const ConllConfig& cfg, Scheme scheme) : cfg_(cfg), scheme_(scheme) {
    if (cfg_.label_column && *cfg_.label_column == cfg_.token_column) {
      throw Error("token_column and label_column must differ");
    }
    if (cfg_.nested_layer && cfg_.label_column) {
      throw Error("nested_layer and label_column are mutually exclusive");
    }
  }

  Split read(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      line = strip_cr(std::move(line));
      if (is_blank(line)) {
        flush();
        continue;
      }
      if (cfg_.comment_prefix && line.starts_with(*cfg_.comment_prefix)) continue;
      consume_row(line, line_no);
    }
    flush();
    return std::move(split_);
  }

 private:
  void consume_row(std::string_view line, std::size_t line_no) {
    const auto fields = split_fields(line, cfg_.field_delimiter);
    if (fields.size() == 1) {
      if (looks_like_label(fields[0])) {
        throw EmptyTokenLine("line " + std::to_string(line_no) +
                             ": label \"" + std::string(fields[0]) +
                             "\" with no corresponding token");
      }
      throw ColumnOutOfRange("line " + std::to_string(line_no) +
                             ": expected at least 2 fields, got 1");
    }
    if (cfg_.token_column >= fields.size()) {
      throw ColumnOutOfRange("line " + std::to_string(line_no) + ": token column " +
                             std::to_string(cfg_.token_column) + " of " +
                             std::to_string(fields.size()) + " fields");
    }
    const std::string_view token = fields[cfg_.token_column];
    if (token.empty()) {
      throw EmptyTokenLine("line " + std::to_string(line_no) + ": empty token field");
    }
    if (!cfg_.keep_docstart && token == kDocstart) return;

    if (cfg_.nested_layer) {
      consume_nested_row(fields, token, line_no);
      return;
    }

    std::size_t label_index;
    if (cfg_.label_column) {
      label_index = *cfg_.label_column;
      if (label_index >= fields.size()) {
        throw ColumnOutOfRange("line " + std::to_string(line_no) + ": label column " +
                               std::to_string(label_index) + " of " +
                               std::to_string(fields.size()) + " fields");
      }
    } else {
      label_index = fields.size() - 1;
      if (label_index == cfg_.token_column) {
        throw ColumnOutOfRange("line " + std::to_string(line_no) +
                               ": last column collides with the token column");
      }
    }
    sentence_.tokens.emplace_back(token);
    sentence_.labels.push_back(
        parse_label_text(fields[label_index], cfg_.label_prepend, scheme_, line_no));
  }

  void consume_nested_row(const std::vector<std::string_view>& fields,
                          std::string_view token, std::size_t line_no) {
    if (fields.size() <= cfg_.token_column + 1) {
      throw ColumnOutOfRange("line " + std::to_string(line_no) +
                             ": no label columns right of the token");
    }
    std::vector<Label> row_labels;
    for (std::size_t i = cfg_.token_column + 1; i < fields.size(); ++i) {
      row_labels.push_back(
          parse_label_text(fields[i], cfg_.label_prepend, scheme_, line_no));
    }
    if (!row_layers_.empty() && row_labels.size() != row_layers_.front().size()) {
      throw RaggedLayers("line " + std::to_string(line_no) + ": row has " +
                         std::to_string(row_labels.size()) +
                         " label column(s), sentence started with " +
                         std::to_string(row_layers_.front().size()));
    }
    sentence_.tokens.emplace_back(token);
    row_layers_.push_back(std::move(row_labels));
  }

  void flush() {
    if (sentence_.tokens.empty()) {
      sentence_ = TaggedSentence{};
      row_layers_.clear();
      return;
    }
    if (cfg_.nested_layer) {
      // Transpose rows into layers and select the requested one.
      const std::size_t layer_count = row_layers_.front().size();
      std::vector<std::vector<Label>> layers(layer_count);
      for (auto& row : row_layers_) {
        for (std::size_t k = 0; k < layer_count; ++k) {
          layers[k].push_back(std::move(row[k]));
        }
      }
      sentence_.labels = flatten_nested(layers, *cfg_.nested_layer);
      row_layers_.clear();
    }
    split_.push_back(std::move(sentence_));
    sentence_ = TaggedSentence{};
  }

  const ConllConfig& cfg_;
  Scheme scheme_;
  Split split_;
  TaggedSentence sentence_;
  std::vector<std::vector<Label>> row_layers_;
};

}  // namespace

Split read_conll(std::istream& in, const ConllConfig& cfg, Scheme scheme) {
  return ConllReader(cfg, scheme).read(in);
}

void write_conll(const Split& split, const ConllConfig& cfg, std::ostream& out,
                 Scheme scheme) {
  const char delim = write_delimiter(cfg);
  for (std::size_t s = 0; s < split.size(); ++s) {
    const TaggedSentence& sentence = split[s];
    if (sentence.tokens.size() != sentence.labels.size()) {
      throw Error("sentence " + std::to_string(s) + ": " +
                  std::to_string(sentence.tokens.size()) + " tokens vs " +
                  std::to_string(sentence.labels.size()) + " labels");
    }
    const auto violations = validate(sentence.labels, scheme, s);
    if (!violations.empty()) {
      throw InvalidSequence("sentence " + std::to_string(s) + " is not valid " +
                            to_string(scheme) + ": " +
                            to_string(violations.front().kind) + " at token " +
                            std::to_string(violations.front().token_index));
    }
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const std::string& token = sentence.tokens[i];
      // A token containing the active delimiter could not be read back.
      const bool clashes = delim == ' '
                               ? token.find_first_of(" \t") != std::string::npos
                               : token.find('\t') != std::string::npos;
      if (token.empty() || clashes) {
        throw Error("sentence " + std::to_string(s) + " token " + std::to_string(i) +
                    ": \"" + token + "\" cannot be written with this delimiter");
      }
      out << token << delim << sentence.labels[i].to_string() << '\n';
    }
    out << '\n';
  }
}

std::string write_conll_string(const Split& split, const ConllConfig& cfg,
                               Scheme scheme) {
  std::ostringstream os;
  write_conll(split, cfg, os, scheme);
  return os.str();
}

std::pair<std::string, std::size_t> drop_tokenless_lines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t removed = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    if (begin == text.size()) break;
    std::size_t end = text.find('\n', begin);
    const std::size_t next = end == std::string_view::npos ? text.size() : end + 1;
    std::string_view raw = text.substr(begin, (end == std::string_view::npos
                                                   ? text.size()
                                                   : end) - begin);
    std::string_view content = raw;
    if (!content.empty() && content.back() == '\r') content.remove_suffix(1);
    const auto fields = split_fields(content, FieldDelimiter::AnyWhitespace);
    if (fields.size() == 1 && looks_like_label(fields[0])) {
      ++removed;
    } else {
      out.append(text.substr(begin, next - begin));
    }
    begin = next;
  }
  return {std::move(out), removed};
}

Split read_sentence_id_delimited(std::istream& in, const SentenceIdConfig& cfg,
                                 Scheme scheme) {
  Split split;
  TaggedSentence sentence;
  std::optional<std::string> current_id;
  std::string line;
  std::size_t line_no = 0;

  const auto flush = [&] {
    if (!sentence.tokens.empty()) {
      if (current_id) sentence.metadata["sentence_id"] = *current_id;
      split.push_back(std::move(sentence));
      sentence = TaggedSentence{};
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(std::move(line));
    if (is_blank(line)) continue;  // ids, not blank lines, delimit sentences
    const auto fields = split_fields(line, cfg.field_delimiter);
    const std::size_t label_index =
        cfg.label_column ? *cfg.label_column : (fields.empty() ? 0 : fields.size() - 1);
    const std::size_t needed =
        std::max(std::max(cfg.id_column, cfg.token_column), label_index);
    if (fields.size() <= needed || fields.size() < 3) {
      throw MissingColumn("line " + std::to_string(line_no) + ": expected at least " +
                          std::to_string(std::max<std::size_t>(needed + 1, 3)) +
                          " fields, got " + std::to_string(fields.size()));
    }
    const std::string id(fields[cfg.id_column]);
    if (!current_id || id != *current_id) {
      flush();
      current_id = id;
    }
    const std::string_view token = fields[cfg.token_column];
    if (token.empty()) {
      throw EmptyTokenLine("line " + std::to_string(line_no) + ": empty token field");
    }
    sentence.tokens.emplace_back(token);
    sentence.labels.push_back(
        parse_label_text(fields[label_index], std::nullopt, scheme, line_no));
  }
  flush();
  return split;
}

}  // namespace nerkit
