// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "nerkit/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nerkit/error.hpp"

namespace fs = std::filesystem;

namespace nerkit {

namespace {

using nlohmann::json;

FieldDelimiter delimiter_from_string(std::string_view name) {
  if (name == "whitespace" || name == "any") return FieldDelimiter::AnyWhitespace;
  if (name == "space") return FieldDelimiter::SingleSpace;
  if (name == "tab") return FieldDelimiter::Tab;
  throw ManifestError("unknown delimiter: " + std::string(name) +
                      " (want whitespace|space|tab)");
}

// "last" or a column ordinal.
std::optional<std::size_t> column_from_json(const json& j, const std::string& key) {
  if (j.is_string()) {
    if (j.get<std::string>() == "last") return std::nullopt;
    throw ManifestError(key + ": expected an integer or \"last\"");
  }
  if (!j.is_number_unsigned()) {
    throw ManifestError(key + ": expected an integer or \"last\"");
  }
  return j.get<std::size_t>();
}

std::string resolve(const std::string& base_dir, const std::string& path) {
  fs::path p(path);
  if (p.is_absolute() || base_dir.empty()) return path;
  return (fs::path(base_dir) / p).lexically_normal().string();
}

SourceSpec parse_source(const json& j, const std::string& base_dir,
                        const std::string& split_name) {
  if (!j.is_object()) {
    throw ManifestError("split \"" + split_name + "\": expected an object");
  }
  SourceSpec spec;
  if (!j.contains("path") || !j["path"].is_string()) {
    throw ManifestError("split \"" + split_name + "\": missing \"path\"");
  }
  spec.path = resolve(base_dir, j["path"].get<std::string>());
  if (j.contains("format")) {
    spec.format = source_format_from_string(j["format"].get<std::string>());
  }
  switch (spec.format) {
    case SourceFormat::Conll:
      if (j.contains("token_column")) {
        spec.conll.token_column = j["token_column"].get<std::size_t>();
      }
      if (j.contains("label_column")) {
        spec.conll.label_column = column_from_json(j["label_column"], "label_column");
      }
      if (j.contains("delimiter")) {
        spec.conll.field_delimiter =
            delimiter_from_string(j["delimiter"].get<std::string>());
      }
      if (j.contains("comment_prefix")) {
        spec.conll.comment_prefix = j["comment_prefix"].get<std::string>();
      }
      if (j.contains("keep_docstart")) {
        spec.conll.keep_docstart = j["keep_docstart"].get<bool>();
      }
      break;
    case SourceFormat::ConllUPlus:
      if (!j.contains("ner_column") || !j["ner_column"].is_string()) {
        throw ManifestError("split \"" + split_name +
                            "\": conllup format needs \"ner_column\"");
      }
      spec.conllu.ner_column_name = j["ner_column"].get<std::string>();
      break;
    case SourceFormat::JsonRecords:
      if (j.contains("tokens_field")) {
        spec.json.tokens_field = j["tokens_field"].get<std::string>();
      }
      if (j.contains("labels_field")) {
        spec.json.labels_field = j["labels_field"].get<std::string>();
      }
      break;
    case SourceFormat::SentenceId:
      if (j.contains("id_column")) {
        spec.sentence_id.id_column = j["id_column"].get<std::size_t>();
      }
      if (j.contains("token_column")) {
        spec.sentence_id.token_column = j["token_column"].get<std::size_t>();
      }
      if (j.contains("label_column")) {
        spec.sentence_id.label_column =
            column_from_json(j["label_column"], "label_column");
      }
      if (j.contains("delimiter")) {
        spec.sentence_id.field_delimiter =
            delimiter_from_string(j["delimiter"].get<std::string>());
      }
      break;
  }
  return spec;
}

Stage parse_stage(const json& j, const std::string& base_dir, std::size_t index) {
  const std::string where = "transform " + std::to_string(index);
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string()) {
    throw ManifestError(where + ": expected an object with an \"op\" key");
  }
  const std::string op = j["op"].get<std::string>();
  Stage stage;
  if (op == "drop_tokenless_lines") {
    stage.kind = StageKind::DropTokenlessLines;
  } else if (op == "prepend_prefix") {
    stage.kind = StageKind::PrependPrefix;
    stage.prefix = j.value("prefix", "I");
    if (stage.prefix.size() != 1 ||
        std::string("BIES").find(stage.prefix) == std::string::npos) {
      throw ManifestError(where + ": prefix must be one of B, I, E, S");
    }
  } else if (op == "normalize_labels") {
    stage.kind = StageKind::NormalizeLabels;
  } else if (op == "flatten_nested") {
    stage.kind = StageKind::FlattenNested;
    stage.layer = j.value("layer", std::size_t{0});
  } else if (op == "apply_overrides") {
    stage.kind = StageKind::ApplyOverrides;
    if (!j.contains("path")) throw ManifestError(where + ": apply_overrides needs a path");
    stage.path = resolve(base_dir, j["path"].get<std::string>());
  } else if (op == "repair") {
    stage.kind = StageKind::Repair;
    stage.strategy = repair_strategy_from_string(j.value("strategy", "conlleval"));
  } else if (op == "convert") {
    stage.kind = StageKind::Convert;
    stage.to = scheme_from_string(j.value("to", "BIO"));
  } else if (op == "apply_typemap") {
    stage.kind = StageKind::ApplyTypemap;
    if (!j.contains("path")) throw ManifestError(where + ": apply_typemap needs a path");
    stage.path = resolve(base_dir, j["path"].get<std::string>());
  } else if (op == "core_types") {
    stage.kind = StageKind::CoreTypes;
    if (j.contains("path")) stage.path = resolve(base_dir, j["path"].get<std::string>());
  } else {
    throw ManifestError(where + ": unknown op \"" + op + "\"");
  }
  return stage;
}

// Stages must run in pipeline order; equal ranks may appear in any order.
int stage_rank(StageKind k) {
  switch (k) {
    case StageKind::DropTokenlessLines: return 0;
    case StageKind::PrependPrefix: return 1;
    case StageKind::NormalizeLabels: return 1;
    case StageKind::FlattenNested: return 1;
    case StageKind::ApplyOverrides: return 2;
    case StageKind::Repair: return 3;
    case StageKind::Convert: return 4;
    case StageKind::ApplyTypemap: return 5;
    case StageKind::CoreTypes: return 5;
  }
  return 0;
}

}  // namespace

SourceFormat source_format_from_string(std::string_view name) {
  if (name == "conll") return SourceFormat::Conll;
  if (name == "conllup" || name == "conllu-plus") return SourceFormat::ConllUPlus;
  if (name == "json") return SourceFormat::JsonRecords;
  if (name == "sentid" || name == "sentence-id") return SourceFormat::SentenceId;
  throw ManifestError("unknown format: " + std::string(name) +
                      " (want conll|conllup|json|sentid)");
}

std::string to_string(SourceFormat f) {
  switch (f) {
    case SourceFormat::Conll: return "conll";
    case SourceFormat::ConllUPlus: return "conllup";
    case SourceFormat::JsonRecords: return "json";
    case SourceFormat::SentenceId: return "sentid";
  }
  return "?";
}

std::string to_string(StageKind k) {
  switch (k) {
    case StageKind::DropTokenlessLines: return "drop_tokenless_lines";
    case StageKind::PrependPrefix: return "prepend_prefix";
    case StageKind::NormalizeLabels: return "normalize_labels";
    case StageKind::FlattenNested: return "flatten_nested";
    case StageKind::ApplyOverrides: return "apply_overrides";
    case StageKind::Repair: return "repair";
    case StageKind::Convert: return "convert";
    case StageKind::ApplyTypemap: return "apply_typemap";
    case StageKind::CoreTypes: return "core_types";
  }
  return "?";
}

Manifest load_manifest(std::istream& in, const std::string& base_dir) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ManifestError(std::string("manifest: ") + e.what());
  }
  if (!doc.is_object()) throw ManifestError("manifest: expected a JSON object");

  Manifest m;
  m.dataset_name = doc.value("dataset", "dataset");
  if (doc.contains("source_encoding")) {
    m.source_encoding = encoding_from_string(doc["source_encoding"].get<std::string>());
  }
  if (doc.contains("scheme_in")) {
    m.scheme_in = scheme_from_string(doc["scheme_in"].get<std::string>());
  }
  if (!doc.contains("output_dir") || !doc["output_dir"].is_string()) {
    throw ManifestError("manifest: missing \"output_dir\"");
  }
  m.output_dir = resolve(base_dir, doc["output_dir"].get<std::string>());
  if (!doc.contains("splits") || !doc["splits"].is_object() || doc["splits"].empty()) {
    throw ManifestError("manifest: needs a non-empty \"splits\" object");
  }
  for (const auto& [name, source] : doc["splits"].items()) {
    m.splits.emplace(name, parse_source(source, base_dir, name));
  }
  if (doc.contains("transforms")) {
    if (!doc["transforms"].is_array()) {
      throw ManifestError("manifest: \"transforms\" must be an array");
    }
    for (std::size_t i = 0; i < doc["transforms"].size(); ++i) {
      m.transforms.push_back(parse_stage(doc["transforms"][i], base_dir, i));
    }
  }
  return m;
}

Manifest load_manifest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ManifestError("cannot open manifest: " + path);
  return load_manifest(in, fs::path(path).parent_path().string());
}

void check_manifest(const Manifest& manifest) {
  if (manifest.output_dir.empty()) throw ManifestError("empty output_dir");
  if (manifest.splits.empty()) throw ManifestError("no splits");

  int rank = -1;
  for (const Stage& stage : manifest.transforms) {
    const int r = stage_rank(stage.kind);
    if (r < rank) {
      throw StageOrderError("stage " + to_string(stage.kind) +
                            " must come earlier in the pipeline");
    }
    rank = r;
    const bool needs_conll_reader = stage.kind == StageKind::FlattenNested ||
                                    stage.kind == StageKind::PrependPrefix ||
                                    stage.kind == StageKind::DropTokenlessLines;
    if (needs_conll_reader) {
      for (const auto& [name, source] : manifest.splits) {
        if (source.format != SourceFormat::Conll) {
          throw ManifestError(to_string(stage.kind) + " requires the conll format, " +
                              "but split \"" + name + "\" is " +
                              to_string(source.format));
        }
      }
    }
    if (!stage.path.empty() && !fs::is_regular_file(stage.path)) {
      throw ManifestError(to_string(stage.kind) + ": no such file: " + stage.path);
    }
  }
  for (const auto& [name, source] : manifest.splits) {
    if (!fs::is_regular_file(source.path)) {
      throw ManifestError("split \"" + name + "\": no such file: " + source.path);
    }
  }
}

std::vector<LabelOverride> load_overrides(std::istream& in) {
  std::vector<LabelOverride> overrides;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    LabelOverride o;
    if (!(fields >> o.sentence_index >> o.token_index >> o.label_text)) {
      throw ParseError("override line " + std::to_string(line_no) +
                       ": want \"sentence token label\"");
    }
    overrides.push_back(std::move(o));
  }
  return overrides;
}

std::vector<LabelOverride> load_overrides_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open overrides: " + path);
  return load_overrides(in);
}

std::size_t apply_overrides(Split& split, const std::vector<LabelOverride>& overrides,
                            Scheme scheme) {
  for (const LabelOverride& o : overrides) {
    if (o.sentence_index >= split.size()) {
      throw OutOfRange("override sentence " + std::to_string(o.sentence_index) +
                       " out of range (" + std::to_string(split.size()) +
                       " sentences)");
    }
    TaggedSentence& sentence = split[o.sentence_index];
    if (o.token_index >= sentence.labels.size()) {
      throw OutOfRange("override token " + std::to_string(o.token_index) +
                       " out of range in sentence " +
                       std::to_string(o.sentence_index));
    }
    sentence.labels[o.token_index] = parse_label(normalize_label(o.label_text), scheme);
  }
  return overrides.size();
}

}  // namespace nerkit
