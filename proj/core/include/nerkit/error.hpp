// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_ERROR_HPP
#define NERKIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nerkit {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Label grammar and sequence-level errors.
struct MalformedLabel : Error { using Error::Error; };
struct InvalidSequence : Error { using Error::Error; };
struct UnrepairedViolations : Error { using Error::Error; };
struct OverlappingMentions : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct RaggedLayers : Error { using Error::Error; };
struct LayerOutOfRange : Error { using Error::Error; };

// Reader and writer errors.
struct ParseError : Error { using Error::Error; };
struct EmptyTokenLine : ParseError { using ParseError::ParseError; };
struct ColumnOutOfRange : ParseError { using ParseError::ParseError; };
struct InvalidUtf8 : ParseError { using ParseError::ParseError; };
struct MissingGlobalColumns : ParseError { using ParseError::ParseError; };
struct UnknownNerColumn : ParseError { using ParseError::ParseError; };
struct FieldMissing : ParseError { using ParseError::ParseError; };
struct LengthMismatch : ParseError { using ParseError::ParseError; };
struct MissingColumn : ParseError { using ParseError::ParseError; };

// Type-map errors.
struct DuplicateSource : Error { using Error::Error; };
struct RenameChain : Error { using Error::Error; };
struct UnknownType : Error { using Error::Error; };

// Scoring and splitting errors.
struct SentenceCountMismatch : Error { using Error::Error; };
struct TokenCountMismatch : Error { using Error::Error; };
struct BadRatios : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };

// Manifest and pipeline errors.
struct ManifestError : Error { using Error::Error; };
struct StageOrderError : ManifestError { using ManifestError::ManifestError; };

}  // namespace nerkit

#endif  // NERKIT_ERROR_HPP
