// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_PIPELINE_HPP
#define NERKIT_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <string>

#include "nerkit/manifest.hpp"

namespace nerkit {

/// What happened to one split while its stages ran.
struct SplitRunReport {
  std::string source_path;
  std::string output_path;
  std::string sha256;
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  std::size_t violations_found = 0;
  std::size_t repairs_applied = 0;
  std::size_t lines_dropped = 0;
  std::size_t overrides_applied = 0;
  std::size_t mentions_renamed = 0;
  std::size_t mentions_dropped = 0;
};

struct RunReport {
  std::string dataset;
  std::map<std::string, SplitRunReport> splits;
  std::int64_t wall_time_ms = 0;

  std::string to_json() const;
  std::string format_text() const;
};

/// Executes the manifest: per split, transcode, run the stages in order, and
/// write canonical CoNLL plus a report.json under the output directory.
/// Identical inputs yield byte-identical outputs. Any stage error aborts the
/// run, removes partial outputs, and rethrows with split/stage context.
RunReport run_manifest(const Manifest& manifest);

}  // namespace nerkit

#endif  // NERKIT_PIPELINE_HPP
