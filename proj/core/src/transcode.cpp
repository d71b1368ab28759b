// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "nerkit/transcode.hpp"

#include <cstddef>
#include <cstdint>

#include "nerkit/error.hpp"

namespace nerkit {

namespace {

// Returns the length of the valid UTF-8 sequence starting at `i`, or 0.
// Strict: rejects overlong encodings, surrogates, and values above U+10FFFF.
std::size_t utf8_sequence_length(std::string_view s, std::size_t i) {
  const auto b = [&](std::size_t k) { return static_cast<std::uint8_t>(s[i + k]); };
  const std::uint8_t b0 = b(0);
  if (b0 < 0x80) return 1;
  if (b0 < 0xC2) return 0;  // continuation byte or overlong lead
  const auto cont = [&](std::size_t k) {
    return i + k < s.size() && (b(k) & 0xC0) == 0x80;
  };
  if (b0 < 0xE0) {
    return cont(1) ? 2 : 0;
  }
  if (b0 < 0xF0) {
    if (!cont(1) || !cont(2)) return 0;
    if (b0 == 0xE0 && b(1) < 0xA0) return 0;  // overlong
    if (b0 == 0xED && b(1) >= 0xA0) return 0;  // surrogate
    return 3;
  }
  if (b0 < 0xF5) {
    if (!cont(1) || !cont(2) || !cont(3)) return 0;
    if (b0 == 0xF0 && b(1) < 0x90) return 0;  // overlong
    if (b0 == 0xF4 && b(1) >= 0x90) return 0;  // above U+10FFFF
    return 4;
  }
  return 0;
}

}  // namespace

TextEncoding encoding_from_string(std::string_view name) {
  if (name == "UTF-8" || name == "utf-8" || name == "UTF8" || name == "utf8") {
    return TextEncoding::Utf8;
  }
  if (name == "ISO-8859-1" || name == "iso-8859-1" || name == "latin-1" ||
      name == "latin1" || name == "LATIN-1") {
    return TextEncoding::Iso8859_1;
  }
  throw Error("unsupported encoding: " + std::string(name));
}

std::string to_string(TextEncoding e) {
  return e == TextEncoding::Utf8 ? "UTF-8" : "ISO-8859-1";
}

bool is_valid_utf8(std::string_view bytes) {
  std::size_t i = 0;
  while (i < bytes.size()) {
    const std::size_t len = utf8_sequence_length(bytes, i);
    if (len == 0) return false;
    i += len;
  }
  return true;
}

std::string transcode(std::string_view bytes, TextEncoding source_encoding) {
  if (source_encoding == TextEncoding::Utf8) {
    std::size_t i = 0;
    while (i < bytes.size()) {
      const std::size_t len = utf8_sequence_length(bytes, i);
      if (len == 0) {
        throw InvalidUtf8("invalid UTF-8 sequence at byte offset " + std::to_string(i));
      }
      i += len;
    }
    return std::string(bytes);
  }
  // ISO-8859-1: every byte maps to the code point of the same value.
  std::string out;
  out.reserve(bytes.size());
  for (char c : bytes) {
    const auto byte = static_cast<std::uint8_t>(c);
    if (byte < 0x80) {
      out.push_back(static_cast<char>(byte));
    } else {
      out.push_back(static_cast<char>(0xC0 | (byte >> 6)));
      out.push_back(static_cast<char>(0x80 | (byte & 0x3F)));
    }
  }
  return out;
}

}  // namespace nerkit
