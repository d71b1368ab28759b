// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_MANIFEST_HPP
#define NERKIT_MANIFEST_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "nerkit/codec.hpp"
#include "nerkit/conll.hpp"
#include "nerkit/conllu_plus.hpp"
#include "nerkit/json_records.hpp"
#include "nerkit/label.hpp"
#include "nerkit/transcode.hpp"

namespace nerkit {

enum class SourceFormat { Conll, ConllUPlus, JsonRecords, SentenceId };

SourceFormat source_format_from_string(std::string_view name);
std::string to_string(SourceFormat f);

/// One split's source file plus its format-specific reader configuration.
struct SourceSpec {
  std::string path;
  SourceFormat format = SourceFormat::Conll;
  ConllConfig conll;
  ColumnSpec conllu;
  JsonRecordSpec json;
  SentenceIdConfig sentence_id;
};

enum class StageKind {
  DropTokenlessLines,
  PrependPrefix,
  NormalizeLabels,
  FlattenNested,
  ApplyOverrides,
  Repair,
  Convert,
  ApplyTypemap,
  CoreTypes,
};

std::string to_string(StageKind k);

struct Stage {
  StageKind kind = StageKind::NormalizeLabels;
  std::string prefix;      // PrependPrefix: letter prepended to bare types
  std::size_t layer = 0;   // FlattenNested
  std::string path;        // ApplyOverrides / ApplyTypemap; CoreTypes optional
  RepairStrategy strategy = RepairStrategy::ConllevalStyle;  // Repair
  Scheme to = Scheme::BIO;  // Convert
};

/// A declarative, per-dataset standardization recipe: where each split comes
/// from, how its labels are encoded, and the ordered transform stages.
struct Manifest {
  std::string dataset_name;
  TextEncoding source_encoding = TextEncoding::Utf8;
  Scheme scheme_in = Scheme::BIO;
  std::map<std::string, SourceSpec> splits;
  std::vector<Stage> transforms;
  std::string output_dir;
};

/// Parses a manifest JSON document. Relative paths inside the document are
/// resolved against `base_dir`.
Manifest load_manifest(std::istream& in, const std::string& base_dir);
Manifest load_manifest_file(const std::string& path);

/// Full pre-execution check: stage order (prepend/normalize/drop/flatten
/// before overrides, overrides before repair, repair before convert, convert
/// before the type-map stages), format compatibility, and the existence of
/// every referenced path. Throws StageOrderError / ManifestError.
void check_manifest(const Manifest& manifest);

/// Manual repair patches: replace the label at (sentence, token).
struct LabelOverride {
  std::size_t sentence_index = 0;
  std::size_t token_index = 0;
  std::string label_text;
};

/// Override file: whitespace-separated "sentence token label" lines,
/// "#" comments and blank lines ignored.
std::vector<LabelOverride> load_overrides(std::istream& in);
std::vector<LabelOverride> load_overrides_file(const std::string& path);

/// Applies overrides in order; labels parse under `scheme`.
/// Out-of-range indices are errors.
std::size_t apply_overrides(Split& split, const std::vector<LabelOverride>& overrides,
                            Scheme scheme);

}  // namespace nerkit

#endif  // NERKIT_MANIFEST_HPP
