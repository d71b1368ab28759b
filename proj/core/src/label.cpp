// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "nerkit/label.hpp"

#include <cctype>

namespace nerkit {

namespace {

bool is_prefix_letter(char c) {
  return c == 'B' || c == 'I' || c == 'E' || c == 'S';
}

std::optional<Prefix> prefix_from_char(char c) {
  switch (c) {
    case 'B': return Prefix::B;
    case 'I': return Prefix::I;
    case 'E': return Prefix::E;
    case 'S': return Prefix::S;
    default: return std::nullopt;
  }
}

bool has_whitespace(std::string_view s) {
  for (unsigned char c : s) {
    if (std::isspace(c)) return true;
  }
  return false;
}

}  // namespace

char to_char(Prefix p) { return static_cast<char>(p); }

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::IO: return "IO";
    case Scheme::IOB1: return "IOB1";
    case Scheme::BIO: return "BIO";
    case Scheme::BIOES: return "BIOES";
  }
  return "?";
}

Scheme scheme_from_string(std::string_view name) {
  if (name == "IO" || name == "io") return Scheme::IO;
  if (name == "IOB1" || name == "iob1" || name == "IOB" || name == "iob") return Scheme::IOB1;
  if (name == "BIO" || name == "bio" || name == "IOB2" || name == "iob2") return Scheme::BIO;
  if (name == "BIOES" || name == "bioes") return Scheme::BIOES;
  throw Error("unknown scheme: " + std::string(name));
}

bool admits(Scheme scheme, Prefix prefix) {
  switch (scheme) {
    case Scheme::IO: return prefix == Prefix::I;
    case Scheme::IOB1:
    case Scheme::BIO: return prefix == Prefix::B || prefix == Prefix::I;
    case Scheme::BIOES: return true;
  }
  return false;
}

Label Label::tagged(Prefix prefix, std::string entity_type) {
  if (entity_type.empty() || has_whitespace(entity_type)) {
    throw MalformedLabel("entity type must be non-empty without whitespace: \"" +
                         entity_type + "\"");
  }
  Label l;
  l.outside_ = false;
  l.prefix_ = prefix;
  l.type_ = std::move(entity_type);
  return l;
}

Label Label::with_prefix(Prefix p) const {
  if (outside_) return *this;
  Label l = *this;
  l.prefix_ = p;
  return l;
}

std::string Label::to_string() const {
  if (outside_) return "O";
  std::string out;
  out.reserve(type_.size() + 2);
  out.push_back(to_char(prefix_));
  out.push_back('-');
  out += type_;
  return out;
}

Label parse_label(std::string_view raw, Scheme scheme) {
  if (raw == "O") return Label::outside();
  if (raw.size() < 3 || raw[1] != '-' || !is_prefix_letter(raw[0])) {
    throw MalformedLabel("not \"O\" or prefix-dash-type: \"" + std::string(raw) + "\"");
  }
  const Prefix prefix = *prefix_from_char(raw[0]);
  if (!admits(scheme, prefix)) {
    throw MalformedLabel(std::string("prefix ") + raw[0] + "- is not admissible under " +
                         to_string(scheme) + ": \"" + std::string(raw) + "\"");
  }
  return Label::tagged(prefix, std::string(raw.substr(2)));
}

std::string normalize_label(std::string_view raw) {
  // Insert the dash only for an admissible prefix letter glued to an
  // uppercase-initial type; everything else passes through untouched.
  if (raw.size() >= 2 && is_prefix_letter(raw[0]) && raw[1] != '-' &&
      std::isupper(static_cast<unsigned char>(raw[1]))) {
    std::string out;
    out.reserve(raw.size() + 1);
    out.push_back(raw[0]);
    out.push_back('-');
    out += raw.substr(1);
    return out;
  }
  return std::string(raw);
}

}  // namespace nerkit
