// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "nerkit/pipeline.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nerkit/digest.hpp"
#include "nerkit/error.hpp"
#include "nerkit/typemap.hpp"

namespace fs = std::filesystem;

namespace nerkit {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Split read_source(const SourceSpec& source, const Manifest& manifest,
                  const std::string& text) {
  std::istringstream in(text);
  switch (source.format) {
    case SourceFormat::Conll: {
      ConllConfig cfg = source.conll;
      for (const Stage& stage : manifest.transforms) {
        if (stage.kind == StageKind::PrependPrefix) cfg.label_prepend = stage.prefix;
        if (stage.kind == StageKind::FlattenNested) cfg.nested_layer = stage.layer;
      }
      return read_conll(in, cfg, manifest.scheme_in);
    }
    case SourceFormat::ConllUPlus:
      return read_conllu_plus(in, source.conllu, manifest.scheme_in);
    case SourceFormat::JsonRecords:
      return read_json_records(in, source.json, manifest.scheme_in);
    case SourceFormat::SentenceId:
      return read_sentence_id_delimited(in, source.sentence_id, manifest.scheme_in);
  }
  throw Error("unreachable source format");
}

std::size_t count_label_changes(const Split& before, const Split& after) {
  std::size_t changed = 0;
  for (std::size_t s = 0; s < before.size(); ++s) {
    for (std::size_t i = 0; i < before[s].labels.size(); ++i) {
      if (before[s].labels[i] != after[s].labels[i]) ++changed;
    }
  }
  return changed;
}

SplitRunReport run_split(const Manifest& manifest, const SourceSpec& source,
                         const std::string& output_path) {
  SplitRunReport report;
  report.source_path = source.path;
  report.output_path = output_path;

  std::string text = transcode(slurp(source.path), manifest.source_encoding);
  for (const Stage& stage : manifest.transforms) {
    if (stage.kind == StageKind::DropTokenlessLines) {
      auto [filtered, removed] = drop_tokenless_lines(text);
      text = std::move(filtered);
      report.lines_dropped += removed;
    }
  }

  Split split = read_source(source, manifest, text);
  Scheme scheme = manifest.scheme_in;

  for (const Stage& stage : manifest.transforms) {
    switch (stage.kind) {
      case StageKind::DropTokenlessLines:
      case StageKind::PrependPrefix:
      case StageKind::NormalizeLabels:
      case StageKind::FlattenNested:
        break;  // applied while reading
      case StageKind::ApplyOverrides: {
        const auto overrides = load_overrides_file(stage.path);
        report.overrides_applied += apply_overrides(split, overrides, scheme);
        break;
      }
      case StageKind::Repair: {
        report.violations_found += validate_split(split, scheme).size();
        Split repaired = split;
        for (TaggedSentence& sentence : repaired) {
          sentence.labels = repair(sentence.labels, scheme, stage.strategy);
        }
        report.repairs_applied += count_label_changes(split, repaired);
        split = std::move(repaired);
        break;
      }
      case StageKind::Convert: {
        for (TaggedSentence& sentence : split) {
          sentence.labels = convert(sentence.labels, scheme, stage.to);
        }
        scheme = stage.to;
        break;
      }
      case StageKind::ApplyTypemap: {
        const TypeMap map = load_typemap_file(stage.path);
        auto [mapped, changes] = apply_typemap(split, map, scheme);
        split = std::move(mapped);
        for (const auto& [key, n] : changes.renamed) report.mentions_renamed += n;
        for (const auto& [key, n] : changes.dropped) report.mentions_dropped += n;
        break;
      }
      case StageKind::CoreTypes: {
        const TypeMap map =
            stage.path.empty() ? default_core_typemap() : load_typemap_file(stage.path);
        auto [mapped, changes] = core_types(split, map, scheme);
        split = std::move(mapped);
        for (const auto& [key, n] : changes.renamed) report.mentions_renamed += n;
        for (const auto& [key, n] : changes.dropped) report.mentions_dropped += n;
        break;
      }
    }
  }

  report.sentences = split.size();
  for (const TaggedSentence& sentence : split) report.tokens += sentence.tokens.size();

  const std::string payload = write_conll_string(split, ConllConfig{}, scheme);
  std::ofstream out(output_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write: " + output_path);
  out << payload;
  out.close();
  if (!out) throw Error("write failed: " + output_path);
  report.sha256 = sha256_hex(payload);
  return report;
}

}  // namespace

std::string RunReport::to_json() const {
  nlohmann::json doc;
  doc["dataset"] = dataset;
  doc["wall_time_ms"] = wall_time_ms;
  doc["splits"] = nlohmann::json::object();
  for (const auto& [name, s] : splits) {
    doc["splits"][name] = {
        {"source", s.source_path},
        {"output", s.output_path},
        {"sha256", s.sha256},
        {"sentences", s.sentences},
        {"tokens", s.tokens},
        {"violations_found", s.violations_found},
        {"repairs_applied", s.repairs_applied},
        {"lines_dropped", s.lines_dropped},
        {"overrides_applied", s.overrides_applied},
        {"mentions_renamed", s.mentions_renamed},
        {"mentions_dropped", s.mentions_dropped},
    };
  }
  return doc.dump(2);
}

std::string RunReport::format_text() const {
  std::ostringstream os;
  os << "dataset: " << dataset << "\n";
  for (const auto& [name, s] : splits) {
    os << "  " << name << ": " << s.sentences << " sentences, " << s.tokens
       << " tokens -> " << s.output_path << "\n";
    os << "    violations: " << s.violations_found
       << ", repairs: " << s.repairs_applied
       << ", lines dropped: " << s.lines_dropped
       << ", overrides: " << s.overrides_applied
       << ", renamed: " << s.mentions_renamed
       << ", dropped: " << s.mentions_dropped << "\n";
    os << "    sha256: " << s.sha256 << "\n";
  }
  os << "wall time: " << wall_time_ms << " ms\n";
  return os.str();
}

RunReport run_manifest(const Manifest& manifest) {
  check_manifest(manifest);
  const auto started = std::chrono::steady_clock::now();

  fs::create_directories(manifest.output_dir);
  RunReport report;
  report.dataset = manifest.dataset_name;

  std::vector<std::string> written;
  try {
    for (const auto& [name, source] : manifest.splits) {
      const std::string output_path =
          (fs::path(manifest.output_dir) / (name + ".conll")).string();
      written.push_back(output_path);
      try {
        report.splits.emplace(name, run_split(manifest, source, output_path));
      } catch (const Error& e) {
        throw Error("split \"" + name + "\" (" + source.path + "): " + e.what());
      }
    }
  } catch (...) {
    for (const std::string& path : written) {
      std::error_code ec;
      fs::remove(path, ec);
    }
    throw;
  }

  report.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  std::ofstream out((fs::path(manifest.output_dir) / "report.json").string(),
                    std::ios::binary | std::ios::trunc);
  out << report.to_json() << "\n";
  return report;
}

}  // namespace nerkit
