// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one numbered criterion per function, one PASS/FAIL line
// each, nonzero exit when anything fails. Oracles live in test_support.hpp
// and stay independent of the production codec.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nerkit/codec.hpp"
#include "nerkit/conll.hpp"
#include "nerkit/conllu_plus.hpp"
#include "nerkit/manifest.hpp"
#include "nerkit/pipeline.hpp"
#include "nerkit/score.hpp"
#include "nerkit/splitter.hpp"
#include "nerkit/stats.hpp"
#include "nerkit/transcode.hpp"
#include "nerkit/typemap.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using namespace nerkit;

namespace {

int failures = 0;
std::vector<std::string> notes;

#define EXPECT(cond)                                                        \
  do {                                                                      \
    if (!(cond)) {                                                          \
      notes.push_back(std::string("    at ") + __FILE__ + ":" +             \
                      std::to_string(__LINE__) + ": " #cond);               \
      return false;                                                         \
    }                                                                       \
  } while (0)

Label O() { return Label::outside(); }
Label B(const std::string& t) { return Label::tagged(Prefix::B, t); }
Label I(const std::string& t) { return Label::tagged(Prefix::I, t); }

TaggedSentence sentence(std::vector<Label> labels) {
  TaggedSentence s;
  for (std::size_t i = 0; i < labels.size(); ++i) s.tokens.push_back("w" + std::to_string(i));
  s.labels = std::move(labels);
  return s;
}

// --- criterion 1: codec round-trip -----------------------------------------

bool criterion_round_trip() {
  std::mt19937 rng(101);
  for (Scheme scheme : {Scheme::BIO, Scheme::IOB1, Scheme::BIOES}) {
    for (int iter = 0; iter < 10000; ++iter) {
      const auto labels =
          nerkit::testing::random_valid_sequence(rng, 1 + iter % 14, scheme);
      EXPECT(validate(labels, scheme).empty());
      EXPECT(encode(decode(labels, scheme), labels.size(), scheme) == labels);
    }
  }
  // Exhaustive BIO, length <= 6, 2 types, against the naive reference.
  const std::vector<Label> alphabet = {O(), B("A"), I("A"), B("B"), I("B")};
  for (std::size_t length = 0; length <= 6; ++length) {
    std::vector<std::size_t> digits(length, 0);
    while (true) {
      std::vector<Label> labels;
      for (std::size_t d : digits) labels.push_back(alphabet[d]);
      if (validate(labels, Scheme::BIO).empty()) {
        EXPECT(decode(labels, Scheme::BIO) ==
               nerkit::testing::naive_bio_decode(labels));
        EXPECT(encode(decode(labels, Scheme::BIO), length, Scheme::BIO) == labels);
      }
      std::size_t k = 0;
      while (k < length && digits[k] == alphabet.size() - 1) digits[k++] = 0;
      if (k == length) break;
      ++digits[k];
    }
  }
  return true;
}

// --- criterion 2: repair soundness and the conlleval rule -------------------

bool criterion_repair() {
  for (const std::string type : {"X", "LOC", "GPE-LOC", "NEO", "PER"}) {
    const std::vector<Label> in = {O(), I(type), I(type)};
    const std::vector<Label> want = {O(), B(type), I(type)};
    EXPECT(repair(in, Scheme::BIO, RepairStrategy::ConllevalStyle) == want);
  }
  // Discard zeroes exactly the violating chunks.
  const std::vector<Label> bad_run = {O(), I("LOC"), I("LOC")};
  const std::vector<Label> all_outside = {O(), O(), O()};
  EXPECT(repair(bad_run, Scheme::BIO, RepairStrategy::Discard) == all_outside);
  const std::vector<Label> partial = {B("ORG"), I("LOC"), O(), B("PER")};
  const std::vector<Label> partial_want = {B("ORG"), O(), O(), B("PER")};
  EXPECT(repair(partial, Scheme::BIO, RepairStrategy::Discard) == partial_want);
  std::mt19937 rng(202);
  for (Scheme scheme : {Scheme::BIO, Scheme::IOB1, Scheme::BIOES}) {
    for (int iter = 0; iter < 3000; ++iter) {
      const auto soup = nerkit::testing::random_label_soup(rng, 1 + iter % 10, scheme);
      for (RepairStrategy strategy :
           {RepairStrategy::ConllevalStyle, RepairStrategy::Discard}) {
        const auto repaired = repair(soup, scheme, strategy);
        EXPECT(validate(repaired, scheme).empty());
        EXPECT(repair(repaired, scheme, strategy) == repaired);
      }
    }
  }
  return true;
}

// --- criterion 3: conversion fidelity on KIND/ThaiNNER-style fixtures -------

bool criterion_conversion() {
  // KIND-style: IO with bare types, prepended I-, converted to BIO.
  {
    const std::string raw =
        "il O\nrossi PER\nvisita O\nroma LOC\ne O\nmilano LOC\n\n";
    ConllConfig cfg;
    cfg.label_prepend = "I";
    std::istringstream in(raw);
    const Split io_split = read_conll(in, cfg, Scheme::IO);
    const auto before = decode_split(io_split, Scheme::IO);
    Split bio_split = io_split;
    for (auto& s : bio_split) s.labels = convert(s.labels, Scheme::IO, Scheme::BIO);
    EXPECT(validate_split(bio_split, Scheme::BIO).empty());
    EXPECT(decode_split(bio_split, Scheme::BIO) == before);
    EXPECT(before.size() == 3);
  }
  // ThaiNNER-style: nested BIOES, top layer only, converted to BIO.
  {
    const std::string raw =
        "bank B-ORG O\n"
        "of I-ORG O\n"
        "siam E-ORG S-LOC\n"
        "today S-DATE O\n"
        "\n";
    ConllConfig cfg;
    cfg.nested_layer = 0;
    std::istringstream in(raw);
    const Split top = read_conll(in, cfg, Scheme::BIOES);
    const auto before = decode_split(top, Scheme::BIOES);
    Split bio = top;
    for (auto& s : bio) s.labels = convert(s.labels, Scheme::BIOES, Scheme::BIO);
    EXPECT(validate_split(bio, Scheme::BIO).empty());
    EXPECT(decode_split(bio, Scheme::BIO) == before);
    EXPECT(before.size() == 2);  // the nested LOC never surfaces
    EXPECT(before[0].entity_type == "ORG");
    EXPECT(before[1].entity_type == "DATE");
  }
  return true;
}

// --- criterion 4: scorer oracle equivalence ---------------------------------

bool criterion_scorer() {
  std::mt19937 rng(303);
  std::size_t pairs = 0;
  while (pairs < 10000) {
    const Split gold = nerkit::testing::random_split(rng, 5, 9);
    Split predicted = gold;
    std::uniform_int_distribution<int> dice(0, 9);
    for (auto& s : predicted) {
      if (dice(rng) < 6) {
        s.labels =
            nerkit::testing::random_valid_sequence(rng, s.labels.size(), Scheme::BIO);
      }
    }
    pairs += gold.size();
    const ScoreReport report = score(gold, predicted);
    const auto oracle = nerkit::testing::brute_force_score(gold, predicted);
    EXPECT(report.micro.gold_count == oracle.gold_total);
    EXPECT(report.micro.predicted_count == oracle.predicted_total);
    EXPECT(report.micro.correct_count == oracle.correct_total);
    for (const auto& [type, t] : report.per_type) {
      const auto count_of = [&](const std::map<std::string, std::size_t>& m) {
        const auto it = m.find(type);
        return it == m.end() ? std::size_t{0} : it->second;
      };
      EXPECT(t.gold_count == count_of(oracle.gold));
      EXPECT(t.predicted_count == count_of(oracle.predicted));
      EXPECT(t.correct_count == count_of(oracle.correct));
    }
  }
  // Worked example: gold 3, predicted 2, correct 1.
  Split gold, predicted;
  gold.push_back(sentence({B("PER"), O(), B("LOC")}));
  gold.push_back(sentence({B("ORG"), I("ORG")}));
  predicted.push_back(sentence({B("PER"), O(), O()}));
  predicted.push_back(sentence({O(), B("ORG")}));
  const ScoreReport worked = score(gold, predicted);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f/%.2f/%.2f", worked.micro.precision,
                worked.micro.recall, worked.micro.f1);
  EXPECT(std::string(buf) == "50.00/33.33/40.00");
  // Perfect and zero-overlap endpoints.
  EXPECT(score(gold, gold).micro.f1 == 100.0);
  Split zero_pred;
  zero_pred.push_back(sentence({O(), B("PER"), O()}));
  zero_pred.push_back(sentence({O(), O()}));
  EXPECT(score(gold, zero_pred).micro.f1 == 0.0);
  return true;
}

// --- criterion 5: type unification ------------------------------------------

bool criterion_unification() {
  std::istringstream map_text(R"({
    "renames": {"ORG": ["Organization", "ORGANIZATION", "ORGANISATION", "org", "NEO"]}
  })");
  const TypeMap map = load_typemap(map_text);
  Split fixture;
  for (const std::string alias :
       {"Organization", "ORGANIZATION", "ORGANISATION", "org", "NEO"}) {
    fixture.push_back(sentence({B(alias), I(alias), O()}));
  }
  const auto before = decode_split(fixture, Scheme::BIO);
  const auto [unified, report] = apply_typemap(fixture, map, Scheme::BIO);
  const auto after = decode_split(unified, Scheme::BIO);
  EXPECT(after.size() == before.size());
  for (std::size_t i = 0; i < after.size(); ++i) {
    EXPECT(after[i].entity_type == "ORG");
    EXPECT(after[i].sentence_index == before[i].sentence_index);
    EXPECT(after[i].start == before[i].start);
    EXPECT(after[i].end == before[i].end);
  }
  EXPECT(report.total_changes() == 5);

  // Core reduction retains exactly LOC/ORG/PER.
  Split mixed;
  mixed.push_back(sentence({B("LOC"), B("ORG"), B("PER"), B("MISC"), B("DATE")}));
  const auto [core, core_report] = core_types(mixed, default_core_typemap(), Scheme::BIO);
  const auto kept = decode_split(core, Scheme::BIO);
  EXPECT(kept.size() == 3);
  EXPECT(kept[0].entity_type == "LOC");
  EXPECT(kept[1].entity_type == "ORG");
  EXPECT(kept[2].entity_type == "PER");
  EXPECT(kept[0].start == 0);
  EXPECT(kept[1].start == 1);
  EXPECT(kept[2].start == 2);
  return true;
}

// --- criterion 6: statistics integrity --------------------------------------

bool criterion_stats() {
  Corpus corpus;
  corpus.splits["train"] = Split(8, sentence({B("PER"), O(), B("LOC"), I("LOC")}));
  corpus.splits["dev"] = Split(1, sentence({B("ORG")}));
  corpus.splits["test"] = Split(1, sentence({O(), O()}));
  const CorpusStats stats = corpus_stats(corpus);
  EXPECT(stats.per_split.at("train").sentence_count == 8);
  EXPECT(stats.per_split.at("train").token_count == 32);
  EXPECT(stats.per_split.at("train").mention_counts.at("PER") == 8);
  EXPECT(stats.per_split.at("train").mention_counts.at("LOC") == 8);
  EXPECT(stats.per_split.at("dev").mention_counts.at("ORG") == 1);
  EXPECT(stats.totals.sentence_count == 8 + 1 + 1);
  EXPECT(stats.totals.token_count == 32 + 1 + 2);
  EXPECT(stats.totals.mention_total() == 17);
  // Additivity across splits, the Table-1 style Total column arithmetic.
  std::size_t sum = 0;
  for (const auto& [name, s] : stats.per_split) sum += s.sentence_count;
  EXPECT(stats.totals.sentence_count == sum);
  return true;
}

// --- criterion 7: split contract --------------------------------------------

bool criterion_split() {
  std::mt19937 rng(404);
  const Split sentences = nerkit::testing::random_split(rng, 10, 6);
  const SplitResult a = split_corpus(sentences, SplitRatios{0.8, 0.1, 0.1}, 21);
  EXPECT(a.train.size() == 8);
  EXPECT(a.dev.size() == 1);
  EXPECT(a.test.size() == 1);
  const SplitResult b = split_corpus(sentences, SplitRatios{0.8, 0.1, 0.1}, 21);
  EXPECT(a.train == b.train);
  EXPECT(a.dev == b.dev);
  EXPECT(a.test == b.test);
  // Union is a permutation of the input.
  std::vector<std::string> before, after;
  const auto key = [](const TaggedSentence& s) {
    std::string k;
    for (const auto& t : s.tokens) k += t + "|";
    return k;
  };
  for (const auto& s : sentences) before.push_back(key(s));
  for (const auto* part : {&a.train, &a.dev, &a.test}) {
    for (const auto& s : *part) after.push_back(key(s));
  }
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  EXPECT(before == after);
  return true;
}

// --- criterion 8: format robustness ------------------------------------------

bool criterion_formats() {
  // ISO-8859-1 byte 0xF1 -> U+00F1.
  EXPECT(transcode("\xF1", TextEncoding::Iso8859_1) == "\xC3\xB1");
  // CoNLL-U Plus "_" rows decode to OUTSIDE.
  std::istringstream conllu(
      "# global.columns = ID FORM NE\n"
      "1\tword\t_\n"
      "2\tname\tB-PER\n");
  const Split plus = read_conllu_plus(conllu, ColumnSpec{"NE"}, Scheme::BIO);
  EXPECT(plus.size() == 1);
  EXPECT(plus[0].labels[0] == O());
  EXPECT(plus[0].labels[1] == B("PER"));
  // Bare-label lines are removed with an accurate count.
  const auto [filtered, removed] =
      drop_tokenless_lines("a O\nO\nb B-LOC\nB-PER\nc O\n");
  EXPECT(removed == 2);
  EXPECT(filtered == "a O\nb B-LOC\nc O\n");
  // Canonical write is byte-idempotent.
  std::mt19937 rng(505);
  const Split corpus = nerkit::testing::random_split(rng, 100, 10);
  const std::string first = write_conll_string(corpus, ConllConfig{});
  std::istringstream reread_in(first);
  const Split reread = read_conll(reread_in, ConllConfig{}, Scheme::BIO);
  EXPECT(write_conll_string(reread, ConllConfig{}) == first);
  return true;
}

// --- criterion 9: end-to-end determinism and CLI exit codes ------------------

bool criterion_pipeline() {
  const fs::path root =
      fs::temp_directory_path() / ("nerkit-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(root);
  fs::create_directories(root);
  const auto write_file = [&](const std::string& name, const std::string& content) {
    std::ofstream out(root / name, std::ios::binary);
    out << content;
    return (root / name).string();
  };
  write_file("train.conll", "a O\nb I-LOC\nc I-LOC\n\nd I-PER\n\n");
  const std::string manifest_path = write_file("manifest.json", R"({
    "dataset": "acceptance",
    "scheme_in": "IO",
    "output_dir": "out",
    "splits": {"train": {"path": "train.conll", "format": "conll"}},
    "transforms": [
      {"op": "repair", "strategy": "conlleval"},
      {"op": "convert", "to": "BIO"}
    ]
  })");
  const Manifest manifest = load_manifest_file(manifest_path);
  const RunReport first = run_manifest(manifest);
  std::ifstream out1(root / "out" / "train.conll", std::ios::binary);
  std::stringstream bytes1;
  bytes1 << out1.rdbuf();
  const RunReport second = run_manifest(manifest);
  std::ifstream out2(root / "out" / "train.conll", std::ios::binary);
  std::stringstream bytes2;
  bytes2 << out2.rdbuf();
  EXPECT(bytes1.str() == bytes2.str());
  EXPECT(first.splits.at("train").sha256 == second.splits.at("train").sha256);

  // CLI exit-code contract: 0 clean, 1 findings, 2 operational error.
  const auto exit_code = [&](const std::string& args) {
    const std::string command =
        std::string(NERKIT_CLI_PATH) + " " + args + " >/dev/null 2>/dev/null";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  const std::string clean = write_file("clean.conll", "a B-PER\n\n");
  const std::string dirty = write_file("dirty.conll", "a O\nb I-LOC\n\n");
  EXPECT(exit_code("validate " + clean) == 0);
  EXPECT(exit_code("validate " + dirty) == 1);
  EXPECT(exit_code("validate " + std::string("/nonexistent.conll")) == 2);
  fs::remove_all(root);
  return true;
}

}  // namespace

int main() {
  const struct {
    int number;
    const char* name;
    std::function<bool()> fn;
  } criteria[] = {
      {1, "codec round-trip (random per scheme + exhaustive BIO vs naive reference)",
       criterion_round_trip},
      {2, "repair soundness, I->B rule, discard zeroing, idempotence", criterion_repair},
      {3, "conversion fidelity on KIND-style and ThaiNNER-style fixtures",
       criterion_conversion},
      {4, "scorer equals the brute-force oracle; 50.00/33.33/40.00; 100.00; 0.00",
       criterion_scorer},
      {5, "ORG alias unification and LOC/ORG/PER core reduction", criterion_unification},
      {6, "statistics integrity and split additivity", criterion_stats},
      {7, "split contract: 8/1/1 sizes, seed determinism, permutation",
       criterion_split},
      {8, "format robustness: transcode, implicit O, tokenless lines, byte-idempotent write",
       criterion_formats},
      {9, "end-to-end determinism and the CLI exit-code contract", criterion_pipeline},
  };

  for (const auto& criterion : criteria) {
    bool ok = false;
    notes.clear();
    try {
      ok = criterion.fn();
    } catch (const std::exception& e) {
      notes.push_back(std::string("    exception: ") + e.what());
    }
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion.number,
                criterion.name);
    if (!ok) {
      ++failures;
      for (const auto& note : notes) std::printf("%s\n", note.c_str());
    }
  }
  if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
