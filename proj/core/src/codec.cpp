// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "nerkit/codec.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace nerkit {

namespace {

bool same_type(const Label& a, const Label& b) {
  return !a.is_outside() && !b.is_outside() && a.type() == b.type();
}

// True when the prior label leaves no chunk open under BIOES.
bool bioes_closed(const std::optional<Label>& prior) {
  if (!prior || prior->is_outside()) return true;
  return prior->prefix() == Prefix::E || prior->prefix() == Prefix::S;
}

Violation make_violation(std::size_t sentence, std::size_t token,
                         const std::optional<Label>& prior, const Label& current,
                         ViolationKind kind) {
  Violation v;
  v.sentence_index = sentence;
  v.token_index = token;
  v.prior = prior;
  v.current = current;
  v.kind = kind;
  return v;
}

// Chunk segmentation used by Discard, matching where a conlleval-style
// repair would place chunk starts. Returns [begin, end) token ranges.
std::vector<std::pair<std::size_t, std::size_t>> lenient_chunks(
    std::span<const Label> labels) {
  std::vector<std::pair<std::size_t, std::size_t>> chunks;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Label& cur = labels[i];
    if (cur.is_outside()) continue;
    const Label* prev = i == 0 ? nullptr : &labels[i - 1];
    const bool prev_closed = prev == nullptr || prev->is_outside() ||
                             prev->prefix() == Prefix::E || prev->prefix() == Prefix::S;
    const bool starts = prev_closed || prev->type() != cur.type() ||
                        cur.prefix() == Prefix::B || cur.prefix() == Prefix::S;
    if (starts || chunks.empty()) {
      chunks.emplace_back(i, i + 1);
    } else {
      chunks.back().second = i + 1;
    }
  }
  return chunks;
}

}  // namespace

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::IllegalStart: return "IllegalStart";
    case ViolationKind::TypeMismatchContinuation: return "TypeMismatchContinuation";
    case ViolationKind::IllegalPrefixTransition: return "IllegalPrefixTransition";
    case ViolationKind::UnterminatedChunk: return "UnterminatedChunk";
  }
  return "?";
}

std::string to_string(RepairStrategy s) {
  switch (s) {
    case RepairStrategy::ConllevalStyle: return "conlleval";
    case RepairStrategy::Discard: return "discard";
    case RepairStrategy::None: return "none";
  }
  return "?";
}

RepairStrategy repair_strategy_from_string(std::string_view name) {
  if (name == "conlleval" || name == "conlleval-style") return RepairStrategy::ConllevalStyle;
  if (name == "discard") return RepairStrategy::Discard;
  if (name == "none") return RepairStrategy::None;
  throw Error("unknown repair strategy: " + std::string(name));
}

std::vector<Violation> validate(std::span<const Label> labels, Scheme scheme,
                                std::size_t sentence_index) {
  std::vector<Violation> out;
  std::optional<Label> prior;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Label& cur = labels[i];
    if (!cur.is_outside() && !admits(scheme, cur.prefix())) {
      out.push_back(make_violation(sentence_index, i, prior, cur,
                                   ViolationKind::IllegalPrefixTransition));
      prior = cur;
      continue;
    }
    switch (scheme) {
      case Scheme::IO:
        break;  // every I-X and O is legal
      case Scheme::BIO:
        if (!cur.is_outside() && cur.prefix() == Prefix::I) {
          if (!prior || prior->is_outside()) {
            out.push_back(make_violation(sentence_index, i, prior, cur,
                                         ViolationKind::IllegalStart));
          } else if (!same_type(*prior, cur)) {
            out.push_back(make_violation(sentence_index, i, prior, cur,
                                         ViolationKind::TypeMismatchContinuation));
          }
        }
        break;
      case Scheme::IOB1:
        // B-X only separates adjacent same-type chunks.
        if (!cur.is_outside() && cur.prefix() == Prefix::B) {
          if (!prior || prior->is_outside() || !same_type(*prior, cur)) {
            out.push_back(make_violation(sentence_index, i, prior, cur,
                                         ViolationKind::IllegalStart));
          }
        }
        break;
      case Scheme::BIOES:
        if (bioes_closed(prior)) {
          if (!cur.is_outside() &&
              (cur.prefix() == Prefix::I || cur.prefix() == Prefix::E)) {
            out.push_back(make_violation(sentence_index, i, prior, cur,
                                         ViolationKind::IllegalStart));
          }
        } else {
          // A chunk is open: only I-X or E-X of the same type may follow.
          if (cur.is_outside() || cur.prefix() == Prefix::B ||
              cur.prefix() == Prefix::S) {
            out.push_back(make_violation(sentence_index, i, prior, cur,
                                         ViolationKind::IllegalPrefixTransition));
          } else if (!same_type(*prior, cur)) {
            out.push_back(make_violation(sentence_index, i, prior, cur,
                                         ViolationKind::TypeMismatchContinuation));
          }
        }
        break;
    }
    prior = cur;
  }
  if (scheme == Scheme::BIOES && !labels.empty()) {
    const Label& last = labels.back();
    if (!last.is_outside() &&
        (last.prefix() == Prefix::B || last.prefix() == Prefix::I)) {
      std::optional<Label> before;
      if (labels.size() >= 2) before = labels[labels.size() - 2];
      out.push_back(make_violation(sentence_index, labels.size() - 1, before, last,
                                   ViolationKind::UnterminatedChunk));
    }
  }
  return out;
}

std::vector<Violation> validate_split(const Split& split, Scheme scheme) {
  std::vector<Violation> out;
  for (std::size_t s = 0; s < split.size(); ++s) {
    auto v = validate(split[s].labels, scheme, s);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

namespace {

// Maps BIOES prefixes onto the BIO repair path: E->I, S->B.
std::vector<Label> bioes_to_bio_prefixes(std::span<const Label> labels) {
  std::vector<Label> bio;
  bio.reserve(labels.size());
  for (const Label& l : labels) {
    if (l.is_outside()) {
      bio.push_back(l);
    } else if (l.prefix() == Prefix::E) {
      bio.push_back(l.with_prefix(Prefix::I));
    } else if (l.prefix() == Prefix::S) {
      bio.push_back(l.with_prefix(Prefix::B));
    } else {
      bio.push_back(l);
    }
  }
  return bio;
}

std::vector<Label> repair_conlleval(std::span<const Label> labels, Scheme scheme) {
  std::vector<Label> out;
  out.reserve(labels.size());
  std::optional<Label> prior;
  for (const Label& raw : labels) {
    Label cur = raw;
    if (!cur.is_outside() && !admits(scheme, cur.prefix())) {
      // Unreachable through parse_label; coerce to an admissible prefix.
      if (scheme == Scheme::IO) {
        cur = cur.with_prefix(Prefix::I);
      } else if (cur.prefix() == Prefix::E) {
        cur = cur.with_prefix(Prefix::I);
      } else {
        cur = cur.with_prefix(Prefix::B);
      }
    }
    if (scheme == Scheme::BIO && !cur.is_outside() && cur.prefix() == Prefix::I) {
      if (!prior || prior->is_outside() || !same_type(*prior, cur)) {
        cur = cur.with_prefix(Prefix::B);
      }
    }
    if (scheme == Scheme::IOB1 && !cur.is_outside() && cur.prefix() == Prefix::B) {
      if (!prior || prior->is_outside() || !same_type(*prior, cur)) {
        cur = cur.with_prefix(Prefix::I);
      }
    }
    out.push_back(cur);
    prior = cur;
  }
  return out;
}

std::vector<Label> repair_discard(std::span<const Label> labels, Scheme scheme) {
  std::vector<Label> out(labels.begin(), labels.end());
  // Zeroing a chunk can strand a following IOB1 separator B, so iterate
  // to a fixpoint; every pass removes at least one whole chunk.
  while (true) {
    const auto violations = validate(out, scheme);
    if (violations.empty()) return out;
    // A violation with an OUTSIDE current label (O closing an open BIOES
    // chunk) implicates the chunk of the preceding token instead.
    std::vector<std::size_t> bad_tokens;
    for (const Violation& v : violations) {
      bad_tokens.push_back(v.current.is_outside() && v.token_index > 0
                               ? v.token_index - 1
                               : v.token_index);
    }
    const auto chunks = lenient_chunks(out);
    for (const auto& [begin, end] : chunks) {
      const bool bad = std::any_of(bad_tokens.begin(), bad_tokens.end(),
                                   [&](std::size_t t) { return t >= begin && t < end; });
      if (!bad) continue;
      for (std::size_t i = begin; i < end; ++i) out[i] = Label::outside();
    }
  }
}

}  // namespace

std::vector<Label> repair(std::span<const Label> labels, Scheme scheme,
                          RepairStrategy strategy) {
  if (strategy == RepairStrategy::None) {
    const auto violations = validate(labels, scheme);
    if (!violations.empty()) {
      throw UnrepairedViolations("strategy none with " +
                                 std::to_string(violations.size()) +
                                 " violation(s); first at token " +
                                 std::to_string(violations.front().token_index));
    }
    return std::vector<Label>(labels.begin(), labels.end());
  }
  if (strategy == RepairStrategy::ConllevalStyle) {
    if (scheme == Scheme::BIOES) {
      // E->I, S->B, conlleval repair in the BIO image, re-encode. A chunk
      // reopened this way closes with E (or S) at its last token.
      const auto bio = bioes_to_bio_prefixes(labels);
      const auto repaired = repair_conlleval(bio, Scheme::BIO);
      return convert(repaired, Scheme::BIO, Scheme::BIOES);
    }
    return repair_conlleval(labels, scheme);
  }
  // Discard never rewrites prefixes, so it works on the scheme directly.
  return repair_discard(labels, scheme);
}

std::vector<Mention> decode(std::span<const Label> labels, Scheme scheme,
                            std::size_t sentence_index) {
  const auto violations = validate(labels, scheme, sentence_index);
  if (!violations.empty()) {
    const Violation& v = violations.front();
    throw InvalidSequence("invalid " + to_string(scheme) + " sequence: " +
                          to_string(v.kind) + " at sentence " +
                          std::to_string(v.sentence_index) + " token " +
                          std::to_string(v.token_index) + " (" +
                          v.current.to_string() + ")");
  }
  std::vector<Mention> mentions;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const Label& cur = labels[i];
    if (cur.is_outside()) continue;
    bool extend = false;
    switch (scheme) {
      case Scheme::BIO:
      case Scheme::BIOES:
        extend = cur.prefix() == Prefix::I || cur.prefix() == Prefix::E;
        break;
      case Scheme::IO:
        extend = i > 0 && same_type(labels[i - 1], cur);
        break;
      case Scheme::IOB1:
        // B-X separates; I-X continues a directly adjacent same-type chunk.
        extend = cur.prefix() == Prefix::I && i > 0 && same_type(labels[i - 1], cur);
        break;
    }
    if (extend) {
      mentions.back().end = i + 1;
    } else {
      mentions.push_back(Mention{sentence_index, i, i + 1, cur.type()});
    }
  }
  return mentions;
}

std::vector<Label> encode(std::span<const Mention> mentions, std::size_t length,
                          Scheme scheme) {
  std::vector<Mention> sorted(mentions.begin(), mentions.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Mention& a, const Mention& b) { return a.start < b.start; });
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Mention& m = sorted[i];
    if (m.start >= m.end || m.end > length) {
      throw OutOfRange("mention [" + std::to_string(m.start) + ", " +
                       std::to_string(m.end) + ") does not fit in length " +
                       std::to_string(length));
    }
    if (i > 0 && m.start < sorted[i - 1].end) {
      throw OverlappingMentions("mentions overlap at token " + std::to_string(m.start));
    }
  }
  std::vector<Label> labels(length, Label::outside());
  const Mention* previous = nullptr;
  for (const Mention& m : sorted) {
    switch (scheme) {
      case Scheme::BIO:
        labels[m.start] = Label::tagged(Prefix::B, m.entity_type);
        for (std::size_t i = m.start + 1; i < m.end; ++i) {
          labels[i] = Label::tagged(Prefix::I, m.entity_type);
        }
        break;
      case Scheme::IOB1: {
        const bool adjacent_same = previous != nullptr && previous->end == m.start &&
                                   previous->entity_type == m.entity_type;
        labels[m.start] =
            Label::tagged(adjacent_same ? Prefix::B : Prefix::I, m.entity_type);
        for (std::size_t i = m.start + 1; i < m.end; ++i) {
          labels[i] = Label::tagged(Prefix::I, m.entity_type);
        }
        break;
      }
      case Scheme::BIOES:
        if (m.end - m.start == 1) {
          labels[m.start] = Label::tagged(Prefix::S, m.entity_type);
        } else {
          labels[m.start] = Label::tagged(Prefix::B, m.entity_type);
          for (std::size_t i = m.start + 1; i + 1 < m.end; ++i) {
            labels[i] = Label::tagged(Prefix::I, m.entity_type);
          }
          labels[m.end - 1] = Label::tagged(Prefix::E, m.entity_type);
        }
        break;
      case Scheme::IO:
        // Adjacent same-type mentions merge here; IO cannot separate them.
        for (std::size_t i = m.start; i < m.end; ++i) {
          labels[i] = Label::tagged(Prefix::I, m.entity_type);
        }
        break;
    }
    previous = &m;
  }
  return labels;
}

std::vector<Label> convert(std::span<const Label> labels, Scheme from, Scheme to) {
  return encode(decode(labels, from), labels.size(), to);
}

std::vector<Label> flatten_nested(const std::vector<std::vector<Label>>& layers,
                                  std::size_t layer_index) {
  if (layer_index >= layers.size()) {
    throw LayerOutOfRange("layer " + std::to_string(layer_index) + " of " +
                          std::to_string(layers.size()) + " layer(s)");
  }
  for (std::size_t i = 1; i < layers.size(); ++i) {
    if (layers[i].size() != layers[0].size()) {
      throw RaggedLayers("layer 0 has " + std::to_string(layers[0].size()) +
                         " labels but layer " + std::to_string(i) + " has " +
                         std::to_string(layers[i].size()));
    }
  }
  return layers[layer_index];
}

std::vector<Mention> decode_split(const Split& split, Scheme scheme) {
  std::vector<Mention> out;
  for (std::size_t s = 0; s < split.size(); ++s) {
    auto m = decode(split[s].labels, scheme, s);
    out.insert(out.end(), m.begin(), m.end());
  }
  return out;
}

std::string format_violations_tsv(std::span<const Violation> violations) {
  std::ostringstream os;
  for (const Violation& v : violations) {
    os << v.sentence_index << '\t' << v.token_index << '\t' << to_string(v.kind)
       << '\t' << (v.prior ? v.prior->to_string() : "^") << '\t'
       << v.current.to_string() << '\n';
  }
  return os.str();
}

std::string violations_to_json(std::span<const Violation> violations) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Violation& v : violations) {
    nlohmann::json item;
    item["sentence"] = v.sentence_index;
    item["token"] = v.token_index;
    item["kind"] = to_string(v.kind);
    item["prior"] = v.prior ? nlohmann::json(v.prior->to_string()) : nlohmann::json();
    item["current"] = v.current.to_string();
    arr.push_back(item);
  }
  return arr.dump(2);
}

}  // namespace nerkit
