// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_TRANSCODE_HPP
#define NERKIT_TRANSCODE_HPP

#include <string>
#include <string_view>

namespace nerkit {

/// Source encodings are always declared explicitly, never sniffed.
enum class TextEncoding { Utf8, Iso8859_1 };

TextEncoding encoding_from_string(std::string_view name);
std::string to_string(TextEncoding e);

/// Converts raw bytes to UTF-8. ISO-8859-1 maps each byte 0x00-0xFF to the
/// code point of the same value. Throws InvalidUtf8 when the input claims
/// UTF-8 but contains an invalid sequence (byte offset in the message).
std::string transcode(std::string_view bytes, TextEncoding source_encoding);

/// True iff the bytes are well-formed UTF-8.
bool is_valid_utf8(std::string_view bytes);

}  // namespace nerkit

#endif  // NERKIT_TRANSCODE_HPP
