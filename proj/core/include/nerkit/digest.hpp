// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_DIGEST_HPP
#define NERKIT_DIGEST_HPP

#include <string>
#include <string_view>

namespace nerkit {

/// SHA-256 of the bytes, as a lowercase hex string.
std::string sha256_hex(std::string_view bytes);

/// SHA-256 of a file's contents.
std::string sha256_file(const std::string& path);

}  // namespace nerkit

#endif  // NERKIT_DIGEST_HPP
