// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "nerkit/codec.hpp"
#include "test_support.hpp"

using namespace nerkit;
using nerkit::testing::naive_bio_decode;
using nerkit::testing::random_label_soup;
using nerkit::testing::random_valid_sequence;

namespace {

Label O() { return Label::outside(); }
Label B(const std::string& t) { return Label::tagged(Prefix::B, t); }
Label I(const std::string& t) { return Label::tagged(Prefix::I, t); }
Label E(const std::string& t) { return Label::tagged(Prefix::E, t); }
Label S(const std::string& t) { return Label::tagged(Prefix::S, t); }

Mention mention(std::size_t start, std::size_t end, const std::string& type,
                std::size_t sentence = 0) {
  return Mention{sentence, start, end, type};
}

}  // namespace

TEST_CASE("validate BIO flags illegal continuations") {
  CHECK(validate(std::vector<Label>{B("PER"), I("PER"), O()}, Scheme::BIO).empty());

  const auto v1 = validate(std::vector<Label>{O(), I("LOC")}, Scheme::BIO);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0].token_index == 1);
  CHECK(v1[0].kind == ViolationKind::IllegalStart);
  CHECK(v1[0].prior == O());
  CHECK(v1[0].current == I("LOC"));

  const auto v2 = validate(std::vector<Label>{B("ORG"), I("LOC")}, Scheme::BIO);
  REQUIRE(v2.size() == 1);
  CHECK(v2[0].kind == ViolationKind::TypeMismatchContinuation);
  CHECK(v2[0].token_index == 1);

  const auto v3 = validate(std::vector<Label>{I("LOC")}, Scheme::BIO);
  REQUIRE(v3.size() == 1);
  CHECK(v3[0].kind == ViolationKind::IllegalStart);
  CHECK_FALSE(v3[0].prior.has_value());
}

TEST_CASE("validate IOB1 only restricts B placement") {
  CHECK(validate(std::vector<Label>{I("LOC"), B("LOC")}, Scheme::IOB1).empty());
  CHECK(validate(std::vector<Label>{I("LOC"), I("ORG")}, Scheme::IOB1).empty());
  CHECK(validate(std::vector<Label>{O(), I("LOC")}, Scheme::IOB1).empty());

  const auto v1 = validate(std::vector<Label>{B("LOC")}, Scheme::IOB1);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0].kind == ViolationKind::IllegalStart);

  const auto v2 = validate(std::vector<Label>{I("ORG"), B("LOC")}, Scheme::IOB1);
  REQUIRE(v2.size() == 1);
  CHECK(v2[0].token_index == 1);
}

TEST_CASE("validate IO is vacuous") {
  CHECK(validate(std::vector<Label>{I("LOC"), I("ORG"), O(), I("LOC")}, Scheme::IO)
            .empty());
}

TEST_CASE("validate BIOES tracks open chunks and sentence end") {
  CHECK(validate(std::vector<Label>{S("PER"), B("LOC"), E("LOC"), O()}, Scheme::BIOES)
            .empty());
  CHECK(validate(std::vector<Label>{B("X"), I("X"), E("X")}, Scheme::BIOES).empty());

  const auto open_end = validate(std::vector<Label>{B("PER")}, Scheme::BIOES);
  REQUIRE(open_end.size() == 1);
  CHECK(open_end[0].kind == ViolationKind::UnterminatedChunk);
  CHECK(open_end[0].token_index == 0);

  const auto o_after_open = validate(std::vector<Label>{B("PER"), O()}, Scheme::BIOES);
  REQUIRE(o_after_open.size() == 1);
  CHECK(o_after_open[0].kind == ViolationKind::IllegalPrefixTransition);
  CHECK(o_after_open[0].token_index == 1);

  const auto bad_start = validate(std::vector<Label>{O(), E("PER")}, Scheme::BIOES);
  REQUIRE(bad_start.size() == 1);
  CHECK(bad_start[0].kind == ViolationKind::IllegalStart);

  const auto mismatch =
      validate(std::vector<Label>{B("PER"), I("LOC"), E("LOC")}, Scheme::BIOES);
  REQUIRE(mismatch.size() >= 1);
  CHECK(mismatch[0].kind == ViolationKind::TypeMismatchContinuation);
}

TEST_CASE("repair conlleval converts illegal I- to B-") {
  const std::vector<Label> in = {O(), I("LOC"), I("LOC")};
  CHECK(repair(in, Scheme::BIO, RepairStrategy::ConllevalStyle) ==
        std::vector<Label>{O(), B("LOC"), I("LOC")});

  const std::vector<Label> legal = {B("PER"), I("PER")};
  CHECK(repair(legal, Scheme::BIO, RepairStrategy::ConllevalStyle) == legal);

  // Type switches open a fresh chunk.
  const std::vector<Label> mixed = {B("ORG"), I("LOC"), I("LOC")};
  CHECK(repair(mixed, Scheme::BIO, RepairStrategy::ConllevalStyle) ==
        std::vector<Label>{B("ORG"), B("LOC"), I("LOC")});
}

TEST_CASE("repair discard zeroes whole invalid chunks") {
  CHECK(repair(std::vector<Label>{O(), I("LOC"), I("LOC")}, Scheme::BIO,
               RepairStrategy::Discard) == std::vector<Label>{O(), O(), O()});
  // The violating continuation is a separate lenient chunk; B-ORG survives.
  CHECK(repair(std::vector<Label>{B("ORG"), I("LOC")}, Scheme::BIO,
               RepairStrategy::Discard) == std::vector<Label>{B("ORG"), O()});
  CHECK(repair(std::vector<Label>{B("PER"), I("PER")}, Scheme::BIO,
               RepairStrategy::Discard) == std::vector<Label>{B("PER"), I("PER")});
}

TEST_CASE("repair discard cascades through stranded IOB1 separators") {
  const std::vector<Label> in = {O(), B("LOC"), B("LOC")};
  CHECK(repair(in, Scheme::IOB1, RepairStrategy::Discard) ==
        std::vector<Label>{O(), O(), O()});
}

TEST_CASE("repair conlleval under IOB1 demotes illegal B- to I-") {
  const std::vector<Label> in = {O(), B("LOC"), I("LOC")};
  CHECK(repair(in, Scheme::IOB1, RepairStrategy::ConllevalStyle) ==
        std::vector<Label>{O(), I("LOC"), I("LOC")});
}

TEST_CASE("repair none passes clean input and rejects violations") {
  const std::vector<Label> legal = {B("PER"), I("PER"), O()};
  CHECK(repair(legal, Scheme::BIO, RepairStrategy::None) == legal);
  CHECK_THROWS_AS(repair(std::vector<Label>{O(), I("LOC")}, Scheme::BIO,
                         RepairStrategy::None),
                  UnrepairedViolations);
}

TEST_CASE("repair BIOES routes through BIO and closes reopened chunks") {
  // Unterminated chunk: the reopened chunk closes with E (or S) at its end.
  CHECK(repair(std::vector<Label>{B("PER"), I("PER")}, Scheme::BIOES,
               RepairStrategy::ConllevalStyle) ==
        std::vector<Label>{B("PER"), E("PER")});
  CHECK(repair(std::vector<Label>{B("PER")}, Scheme::BIOES,
               RepairStrategy::ConllevalStyle) == std::vector<Label>{S("PER")});
  // A dangling E opens a chunk in the BIO image and becomes a single.
  CHECK(repair(std::vector<Label>{O(), E("PER")}, Scheme::BIOES,
               RepairStrategy::ConllevalStyle) == std::vector<Label>{O(), S("PER")});
  // Valid input survives unchanged.
  const std::vector<Label> legal = {S("PER"), B("LOC"), E("LOC")};
  CHECK(repair(legal, Scheme::BIOES, RepairStrategy::ConllevalStyle) == legal);
  CHECK(repair(legal, Scheme::BIOES, RepairStrategy::Discard) == legal);
}

TEST_CASE("violations stay inside the sentence") {
  std::mt19937 rng(4321);
  for (Scheme scheme : {Scheme::BIO, Scheme::IOB1, Scheme::BIOES}) {
    for (int iter = 0; iter < 1000; ++iter) {
      const auto soup = random_label_soup(rng, 1 + iter % 12, scheme);
      for (const Violation& v : validate(soup, scheme, 3)) {
        CHECK(v.sentence_index == 3);
        CHECK(v.token_index < soup.size());
        if (v.kind == ViolationKind::UnterminatedChunk) {
          CHECK(v.token_index == soup.size() - 1);
        }
      }
    }
  }
}

TEST_CASE("repair soundness, idempotence, and conservatism on random soup") {
  std::mt19937 rng(1234);
  for (Scheme scheme : {Scheme::BIO, Scheme::IOB1, Scheme::BIOES}) {
    for (int iter = 0; iter < 2000; ++iter) {
      const auto soup = random_label_soup(rng, 1 + iter % 12, scheme);
      for (RepairStrategy strategy :
           {RepairStrategy::ConllevalStyle, RepairStrategy::Discard}) {
        const auto repaired = repair(soup, scheme, strategy);
        REQUIRE(repaired.size() == soup.size());
        CHECK(validate(repaired, scheme).empty());
        CHECK(repair(repaired, scheme, strategy) == repaired);
        for (std::size_t i = 0; i < soup.size(); ++i) {
          if (strategy == RepairStrategy::ConllevalStyle) {
            // Prefix-only changes: outside status and types are untouched.
            CHECK(soup[i].is_outside() == repaired[i].is_outside());
            if (!soup[i].is_outside()) CHECK(soup[i].type() == repaired[i].type());
          } else {
            // Tokens either keep their label or move to OUTSIDE.
            CHECK((repaired[i] == soup[i] || repaired[i].is_outside()));
          }
        }
      }
    }
  }
}

TEST_CASE("decode extracts mentions per scheme") {
  CHECK(decode(std::vector<Label>{B("PER"), I("PER"), O()}, Scheme::BIO) ==
        std::vector<Mention>{mention(0, 2, "PER")});
  CHECK(decode(std::vector<Label>{I("LOC"), I("LOC"), I("ORG")}, Scheme::IO) ==
        std::vector<Mention>{mention(0, 2, "LOC"), mention(2, 3, "ORG")});
  CHECK(decode(std::vector<Label>{S("PER"), B("LOC"), E("LOC")}, Scheme::BIOES) ==
        std::vector<Mention>{mention(0, 1, "PER"), mention(1, 3, "LOC")});
  CHECK(decode(std::vector<Label>{I("LOC"), B("LOC"), I("LOC")}, Scheme::IOB1) ==
        std::vector<Mention>{mention(0, 1, "LOC"), mention(1, 3, "LOC")});
  CHECK(decode(std::vector<Label>{O(), O()}, Scheme::BIO).empty());
}

TEST_CASE("decode rejects invalid sequences") {
  CHECK_THROWS_AS(decode(std::vector<Label>{O(), I("LOC")}, Scheme::BIO),
                  InvalidSequence);
  CHECK_THROWS_AS(decode(std::vector<Label>{B("PER")}, Scheme::BIOES), InvalidSequence);
}

TEST_CASE("encode realizes mentions per scheme") {
  CHECK(encode(std::vector<Mention>{mention(0, 2, "PER")}, 3, Scheme::BIO) ==
        std::vector<Label>{B("PER"), I("PER"), O()});
  CHECK(encode(std::vector<Mention>{mention(0, 1, "LOC"), mention(1, 2, "LOC")}, 2,
               Scheme::IOB1) == std::vector<Label>{I("LOC"), B("LOC")});
  CHECK(encode(std::vector<Mention>{mention(0, 1, "LOC"), mention(1, 2, "LOC")}, 2,
               Scheme::IO) == std::vector<Label>{I("LOC"), I("LOC")});
  CHECK(encode(std::vector<Mention>{mention(1, 2, "PER")}, 3, Scheme::BIOES) ==
        std::vector<Label>{O(), S("PER"), O()});
  CHECK(encode({}, 2, Scheme::BIO) == std::vector<Label>{O(), O()});
}

TEST_CASE("encode rejects overlapping or out-of-range mentions") {
  CHECK_THROWS_AS(encode(std::vector<Mention>{mention(0, 2, "A"), mention(1, 3, "B")},
                         4, Scheme::BIO),
                  OverlappingMentions);
  CHECK_THROWS_AS(encode(std::vector<Mention>{mention(1, 4, "A")}, 3, Scheme::BIO),
                  OutOfRange);
  CHECK_THROWS_AS(encode(std::vector<Mention>{mention(2, 2, "A")}, 3, Scheme::BIO),
                  OutOfRange);
}

TEST_CASE("convert moves between schemes through mentions") {
  CHECK(convert(std::vector<Label>{I("LOC"), I("LOC")}, Scheme::IO, Scheme::BIO) ==
        std::vector<Label>{B("LOC"), I("LOC")});
  CHECK(convert(std::vector<Label>{B("PER"), I("PER")}, Scheme::BIO, Scheme::BIOES) ==
        std::vector<Label>{B("PER"), E("PER")});
  CHECK(convert(std::vector<Label>{O(), O()}, Scheme::IOB1, Scheme::BIOES) ==
        std::vector<Label>{O(), O()});
}

TEST_CASE("round-trip: encode(decode(s)) == s on random valid sequences") {
  std::mt19937 rng(99);
  for (Scheme scheme : {Scheme::BIO, Scheme::IOB1, Scheme::BIOES}) {
    for (int iter = 0; iter < 10000; ++iter) {
      const auto labels = random_valid_sequence(rng, 1 + iter % 14, scheme);
      REQUIRE(validate(labels, scheme).empty());
      const auto mentions = decode(labels, scheme);
      CHECK(encode(mentions, labels.size(), scheme) == labels);
    }
  }
}

TEST_CASE("conversion preserves decoded mentions when the target is lossless") {
  std::mt19937 rng(7);
  const Scheme schemes[] = {Scheme::BIO, Scheme::IOB1, Scheme::BIOES};
  for (Scheme from : schemes) {
    for (Scheme to : schemes) {
      for (int iter = 0; iter < 1000; ++iter) {
        const auto labels = random_valid_sequence(rng, 1 + iter % 10, from);
        const auto converted = convert(labels, from, to);
        CHECK(decode(converted, to) == decode(labels, from));
      }
    }
  }
}

TEST_CASE("conversion to IO is lossless only without same-type adjacency") {
  std::mt19937 rng(8);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto labels = random_valid_sequence(rng, 1 + iter % 10, Scheme::BIO);
    const auto mentions = decode(labels, Scheme::BIO);
    bool adjacent_same = false;
    for (std::size_t i = 1; i < mentions.size(); ++i) {
      if (mentions[i].start == mentions[i - 1].end &&
          mentions[i].entity_type == mentions[i - 1].entity_type) {
        adjacent_same = true;
      }
    }
    if (adjacent_same) continue;
    const auto converted = convert(labels, Scheme::BIO, Scheme::IO);
    CHECK(decode(converted, Scheme::IO) == mentions);
  }
}

TEST_CASE("decode matches the naive reference on all short BIO sequences") {
  // Exhaustive enumeration over {O, B-A, I-A, B-B, I-B}^k for k <= 6.
  const std::vector<Label> alphabet = {O(), B("A"), I("A"), B("B"), I("B")};
  std::size_t valid_count = 0;
  for (std::size_t length = 0; length <= 6; ++length) {
    std::vector<std::size_t> digits(length, 0);
    while (true) {
      std::vector<Label> labels;
      labels.reserve(length);
      for (std::size_t d : digits) labels.push_back(alphabet[d]);
      if (validate(labels, Scheme::BIO).empty()) {
        ++valid_count;
        CHECK(decode(labels, Scheme::BIO) == naive_bio_decode(labels));
      } else {
        CHECK_THROWS_AS(decode(labels, Scheme::BIO), InvalidSequence);
      }
      // Next tuple.
      std::size_t k = 0;
      while (k < length && digits[k] == alphabet.size() - 1) digits[k++] = 0;
      if (k == length) break;
      ++digits[k];
    }
    if (length == 0) continue;
  }
  CHECK(valid_count > 1000);
}

TEST_CASE("flatten_nested selects a layer and checks shape") {
  const std::vector<std::vector<Label>> layers = {{B("ORG"), I("ORG")},
                                                  {B("PER"), O()}};
  CHECK(flatten_nested(layers, 0) == std::vector<Label>{B("ORG"), I("ORG")});
  CHECK(flatten_nested(layers, 1) == std::vector<Label>{B("PER"), O()});
  CHECK_THROWS_AS(flatten_nested(layers, 2), LayerOutOfRange);
  CHECK_THROWS_AS(flatten_nested({{O()}, {O(), O()}}, 0), RaggedLayers);
  CHECK_THROWS_AS(flatten_nested({}, 0), LayerOutOfRange);
}

TEST_CASE("violation reports serialize to TSV and JSON") {
  const auto violations = validate(std::vector<Label>{O(), I("LOC")}, Scheme::BIO, 7);
  const std::string tsv = format_violations_tsv(violations);
  CHECK(tsv == "7\t1\tIllegalStart\tO\tI-LOC\n");
  const std::string json = violations_to_json(violations);
  CHECK(json.find("\"IllegalStart\"") != std::string::npos);
  CHECK(json.find("\"I-LOC\"") != std::string::npos);

  const auto at_start = validate(std::vector<Label>{I("LOC")}, Scheme::BIO);
  CHECK(format_violations_tsv(at_start) == "0\t0\tIllegalStart\t^\tI-LOC\n");
  CHECK(violations_to_json(at_start).find("null") != std::string::npos);
}
