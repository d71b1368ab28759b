// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0
//
// nerkit: standardize, validate, convert, and score token-labeled NER data.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nerkit/codec.hpp"
#include "nerkit/conll.hpp"
#include "nerkit/conllu_plus.hpp"
#include "nerkit/digest.hpp"
#include "nerkit/error.hpp"
#include "nerkit/json_records.hpp"
#include "nerkit/label.hpp"
#include "nerkit/manifest.hpp"
#include "nerkit/pipeline.hpp"
#include "nerkit/score.hpp"
#include "nerkit/splitter.hpp"
#include "nerkit/stats.hpp"
#include "nerkit/transcode.hpp"
#include "nerkit/typemap.hpp"

namespace fs = std::filesystem;

namespace {

struct InputOptions {
  std::string format = "conll";
  std::string scheme = "BIO";
  std::string encoding = "UTF-8";
  // conll
  std::size_t token_column = 0;
  std::string label_column = "last";
  std::string delimiter = "whitespace";
  std::string comment_prefix;
  bool keep_docstart = false;
  int nested_layer = -1;  // -1 = flat labels
  std::string prepend;
  // conllup
  std::string ner_column;
  // json
  std::string tokens_field = "tokens";
  std::string labels_field = "ner_tags";
  // sentid
  std::size_t id_column = 0;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--format", in.format, "Input format: conll|conllup|json|sentid")
      ->check(CLI::IsMember({"conll", "conllup", "json", "sentid"}));
  cmd->add_option("--scheme", in.scheme, "Input encoding scheme: IO|IOB1|BIO|BIOES");
  cmd->add_option("--encoding", in.encoding, "Source text encoding: UTF-8|ISO-8859-1");
  cmd->add_option("--token-column", in.token_column, "Token column (conll)");
  cmd->add_option("--label-column", in.label_column,
                  "Label column ordinal or \"last\" (conll/sentid)");
  cmd->add_option("--delimiter", in.delimiter, "Field delimiter: whitespace|space|tab");
  cmd->add_option("--comment-prefix", in.comment_prefix,
                  "Skip lines starting with this prefix (conll)");
  cmd->add_flag("--keep-docstart", in.keep_docstart, "Keep -DOCSTART- lines (conll)");
  cmd->add_option("--nested-layer", in.nested_layer,
                  "Treat all columns right of the token as annotation layers "
                  "and keep this one (conll)");
  cmd->add_option("--prepend-prefix", in.prepend,
                  "Prefix letter prepended to bare type labels (conll)");
  cmd->add_option("--ner-column", in.ner_column, "NER column name (conllup)");
  cmd->add_option("--tokens-field", in.tokens_field, "Tokens field name (json)");
  cmd->add_option("--labels-field", in.labels_field, "Labels field name (json)");
  cmd->add_option("--id-column", in.id_column, "Sentence-id column (sentid)");
}

nerkit::FieldDelimiter parse_delimiter(const std::string& name) {
  if (name == "whitespace" || name == "any") return nerkit::FieldDelimiter::AnyWhitespace;
  if (name == "space") return nerkit::FieldDelimiter::SingleSpace;
  if (name == "tab") return nerkit::FieldDelimiter::Tab;
  throw nerkit::Error("unknown delimiter: " + name);
}

std::optional<std::size_t> parse_column(const std::string& value) {
  if (value == "last") return std::nullopt;
  try {
    std::size_t end = 0;
    const auto column = std::stoul(value, &end);
    if (end != value.size()) throw std::invalid_argument(value);
    return static_cast<std::size_t>(column);
  } catch (const std::exception&) {
    throw nerkit::Error("--label-column wants an integer or \"last\", got \"" +
                        value + "\"");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw nerkit::Error("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

nerkit::Split load_split(const InputOptions& in, const std::string& path) {
  const nerkit::Scheme scheme = nerkit::scheme_from_string(in.scheme);
  const std::string text =
      nerkit::transcode(slurp(path), nerkit::encoding_from_string(in.encoding));
  std::istringstream stream(text);
  if (in.format == "conll") {
    nerkit::ConllConfig cfg;
    cfg.token_column = in.token_column;
    cfg.label_column = parse_column(in.label_column);
    cfg.field_delimiter = parse_delimiter(in.delimiter);
    if (!in.comment_prefix.empty()) cfg.comment_prefix = in.comment_prefix;
    cfg.keep_docstart = in.keep_docstart;
    if (in.nested_layer >= 0) {
      cfg.nested_layer = static_cast<std::size_t>(in.nested_layer);
      cfg.label_column.reset();
    }
    if (!in.prepend.empty()) cfg.label_prepend = in.prepend;
    return nerkit::read_conll(stream, cfg, scheme);
  }
  if (in.format == "conllup") {
    if (in.ner_column.empty()) {
      throw nerkit::Error("--ner-column is required for conllup input");
    }
    return nerkit::read_conllu_plus(stream, nerkit::ColumnSpec{in.ner_column}, scheme);
  }
  if (in.format == "json") {
    return nerkit::read_json_records(
        stream, nerkit::JsonRecordSpec{in.tokens_field, in.labels_field}, scheme);
  }
  nerkit::SentenceIdConfig cfg;
  cfg.id_column = in.id_column;
  cfg.token_column = in.token_column == 0 ? 1 : in.token_column;
  cfg.label_column = parse_column(in.label_column);
  cfg.field_delimiter = parse_delimiter(in.delimiter);
  return nerkit::read_sentence_id_delimited(stream, cfg, scheme);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary | std::ios::trunc);
  if (!out) throw nerkit::Error("cannot write: " + output);
  out << text;
}

void write_split(const nerkit::Split& split, nerkit::Scheme scheme,
                 const std::string& output) {
  const std::string payload =
      nerkit::write_conll_string(split, nerkit::ConllConfig{}, scheme);
  if (output.empty() || output == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream out(output, std::ios::binary | std::ios::trunc);
  if (!out) throw nerkit::Error("cannot write: " + output);
  out << payload;
}

std::vector<double> parse_ratios(const std::string& text) {
  std::vector<double> ratios;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) ratios.push_back(std::stod(part));
  if (ratios.size() != 3) {
    throw nerkit::Error("--ratios wants three comma-separated fractions");
  }
  return ratios;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Standardize, validate, convert, and score NER corpora"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool quiet = false;
  app.add_flag("--quiet", quiet, "Suppress progress chatter on stderr");

  InputOptions in;
  std::string input_path;
  std::string output;
  bool as_json = false;

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Report label-transition violations");
  validate_cmd->add_option("input", input_path, "Input file")->required();
  add_input_options(validate_cmd, in);
  validate_cmd->add_flag("--json", as_json, "Emit the report as JSON");
  validate_cmd->add_option("--output,-o", output, "Report file (default stdout)");

  // repair
  std::string strategy = "conlleval";
  std::string overrides_path;
  auto* repair_cmd = app.add_subcommand("repair", "Repair invalid label transitions");
  repair_cmd->add_option("input", input_path, "Input file")->required();
  add_input_options(repair_cmd, in);
  repair_cmd->add_option("--strategy", strategy, "conlleval|discard|none");
  repair_cmd->add_option("--overrides", overrides_path,
                         "Manual repairs applied before the automatic pass");
  repair_cmd->add_option("--output,-o", output, "Output file (default stdout)");

  // convert
  std::string to_scheme = "BIO";
  auto* convert_cmd = app.add_subcommand("convert", "Convert between encoding schemes");
  convert_cmd->add_option("input", input_path, "Input file")->required();
  add_input_options(convert_cmd, in);
  convert_cmd->add_option("--to", to_scheme, "Target scheme: IO|IOB1|BIO|BIOES");
  convert_cmd->add_option("--output,-o", output, "Output file (default stdout)");

  // map-types
  std::string map_path;
  auto* map_cmd = app.add_subcommand("map-types", "Rename/drop entity types via a map file");
  map_cmd->add_option("input", input_path, "Input file")->required();
  add_input_options(map_cmd, in);
  map_cmd->add_option("--map", map_path, "Type map JSON file")->required();
  map_cmd->add_option("--output,-o", output, "Output file (default stdout)");

  // core-types
  auto* core_cmd = app.add_subcommand("core-types", "Reduce to the LOC/ORG/PER core types");
  core_cmd->add_option("input", input_path, "Input file")->required();
  add_input_options(core_cmd, in);
  core_cmd->add_option("--map", map_path, "Core map JSON file (defaults to built-in)");
  core_cmd->add_option("--output,-o", output, "Output file (default stdout)");

  // stats
  std::vector<std::string> stat_inputs;
  auto* stats_cmd = app.add_subcommand("stats", "Sentence/token/mention statistics");
  stats_cmd->add_option("inputs", stat_inputs, "Split files (named by file stem)")
      ->required();
  add_input_options(stats_cmd, in);
  stats_cmd->add_flag("--json", as_json, "Emit statistics as JSON");
  stats_cmd->add_option("--output,-o", output, "Report file (default stdout)");

  // split
  std::string ratios_text = "0.8,0.1,0.1";
  std::uint64_t seed = 0;
  std::string output_dir;
  auto* split_cmd = app.add_subcommand("split", "Deterministic train/dev/test split");
  split_cmd->add_option("input", input_path, "Input file")->required();
  add_input_options(split_cmd, in);
  split_cmd->add_option("--ratios", ratios_text, "train,dev,test fractions (sum to 1)");
  split_cmd->add_option("--seed", seed, "Shuffle seed")->required();
  split_cmd->add_option("--output-dir", output_dir, "Directory for the three outputs")
      ->required();

  // score
  std::string gold_path, predicted_path;
  auto* score_cmd = app.add_subcommand("score", "conlleval-style span F1");
  score_cmd->add_option("gold", gold_path, "Gold file")->required();
  score_cmd->add_option("predicted", predicted_path, "Predictions file")->required();
  add_input_options(score_cmd, in);
  score_cmd->add_flag("--json", as_json, "Emit the full-precision report as JSON");
  score_cmd->add_option("--output,-o", output, "Report file (default stdout)");

  // run
  std::string manifest_path;
  auto* run_cmd = app.add_subcommand("run", "Execute a standardization manifest");
  run_cmd->add_option("manifest", manifest_path, "Manifest JSON file")->required();
  run_cmd->add_flag("--json", as_json, "Emit the run report as JSON");
  run_cmd->add_option("--output,-o", output, "Report file (default stdout)");

  // aggregate
  std::vector<std::string> report_paths;
  auto* agg_cmd = app.add_subcommand("aggregate",
                                     "Mean and standard error of micro F1 over reports");
  agg_cmd->add_option("reports", report_paths, "Score report JSON files")->required();
  agg_cmd->add_flag("--json", as_json, "Emit the aggregate as JSON");
  agg_cmd->add_option("--output,-o", output, "Report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "nerkit: " << e.what() << std::endl;
    return 2;
  }

  try {
    if (app.got_subcommand(validate_cmd)) {
      const auto split = load_split(in, input_path);
      const auto violations =
          nerkit::validate_split(split, nerkit::scheme_from_string(in.scheme));
      emit(as_json ? nerkit::violations_to_json(violations) + "\n"
                   : nerkit::format_violations_tsv(violations),
           output);
      return violations.empty() ? 0 : 1;
    }

    if (app.got_subcommand(repair_cmd)) {
      auto split = load_split(in, input_path);
      const auto scheme = nerkit::scheme_from_string(in.scheme);
      if (!overrides_path.empty()) {
        const auto overrides = nerkit::load_overrides_file(overrides_path);
        nerkit::apply_overrides(split, overrides, scheme);
        if (!quiet) {
          std::cerr << "applied " << overrides.size() << " override(s)\n";
        }
      }
      const auto strat = nerkit::repair_strategy_from_string(strategy);
      std::size_t changed = 0;
      for (auto& sentence : split) {
        auto repaired = nerkit::repair(sentence.labels, scheme, strat);
        for (std::size_t i = 0; i < repaired.size(); ++i) {
          changed += repaired[i] != sentence.labels[i];
        }
        sentence.labels = std::move(repaired);
      }
      write_split(split, scheme, output);
      if (!quiet) std::cerr << "repaired " << changed << " label(s)\n";
      return 0;
    }

    if (app.got_subcommand(convert_cmd)) {
      auto split = load_split(in, input_path);
      const auto from = nerkit::scheme_from_string(in.scheme);
      const auto to = nerkit::scheme_from_string(to_scheme);
      for (auto& sentence : split) {
        sentence.labels = nerkit::convert(sentence.labels, from, to);
      }
      write_split(split, to, output);
      return 0;
    }

    if (app.got_subcommand(map_cmd) || app.got_subcommand(core_cmd)) {
      auto split = load_split(in, input_path);
      const auto scheme = nerkit::scheme_from_string(in.scheme);
      const bool core = app.got_subcommand(core_cmd);
      const nerkit::TypeMap map = map_path.empty()
                                      ? nerkit::default_core_typemap()
                                      : nerkit::load_typemap_file(map_path);
      auto [mapped, changes] = core ? nerkit::core_types(split, map, scheme)
                                    : nerkit::apply_typemap(split, map, scheme);
      write_split(mapped, scheme, output);
      if (!quiet) {
        for (const auto& [pair, count] : changes.renamed) {
          std::cerr << pair.first << " -> " << pair.second << ": " << count << "\n";
        }
        for (const auto& [type, count] : changes.dropped) {
          std::cerr << type << " dropped: " << count << "\n";
        }
      }
      return 0;
    }

    if (app.got_subcommand(stats_cmd)) {
      nerkit::Corpus corpus;
      for (const std::string& path : stat_inputs) {
        const std::string name = fs::path(path).stem().string();
        if (!corpus.splits.emplace(name, load_split(in, path)).second) {
          throw nerkit::Error("duplicate split name \"" + name +
                              "\" (files are named by stem)");
        }
      }
      const auto stats =
          nerkit::corpus_stats(corpus, nerkit::scheme_from_string(in.scheme));
      emit(as_json ? nerkit::stats_to_json(stats) + "\n"
                   : nerkit::format_stats_text(stats),
           output);
      return 0;
    }

    if (app.got_subcommand(split_cmd)) {
      const auto split = load_split(in, input_path);
      const auto ratios = parse_ratios(ratios_text);
      const auto result = nerkit::split_corpus(
          split, nerkit::SplitRatios{ratios[0], ratios[1], ratios[2]}, seed);
      const auto scheme = nerkit::scheme_from_string(in.scheme);
      fs::create_directories(output_dir);
      const auto emit = [&](const char* name, const nerkit::Split& s) {
        write_split(s, scheme, (fs::path(output_dir) / (std::string(name) + ".conll")).string());
        if (!quiet) std::cerr << name << ": " << s.size() << " sentences\n";
      };
      emit("train", result.train);
      emit("dev", result.dev);
      emit("test", result.test);
      return 0;
    }

    if (app.got_subcommand(score_cmd)) {
      const auto gold = load_split(in, gold_path);
      const auto predicted = load_split(in, predicted_path);
      const auto report = nerkit::score(gold, predicted);
      emit(as_json ? nerkit::score_to_json(report) + "\n"
                   : nerkit::format_score_text(report),
           output);
      return 0;
    }

    if (app.got_subcommand(run_cmd)) {
      const auto manifest = nerkit::load_manifest_file(manifest_path);
      const auto report = nerkit::run_manifest(manifest);
      emit(as_json ? report.to_json() + "\n" : report.format_text(), output);
      return 0;
    }

    if (app.got_subcommand(agg_cmd)) {
      std::vector<double> f1s;
      for (const std::string& path : report_paths) {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw nerkit::Error("cannot open: " + path);
        f1s.push_back(nerkit::score_report_from_json(file).micro.f1);
      }
      const auto agg = nerkit::aggregate_values(f1s);
      std::string text;
      if (as_json) {
        std::ostringstream os;
        os << "{\n  \"mean\": " << agg.mean << ",\n  \"standard_error\": "
           << agg.standard_error << ",\n  \"count\": " << agg.count << "\n}\n";
        text = os.str();
      } else {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "F1: %.2f ±%.2f (n=%zu)\n", agg.mean,
                      agg.standard_error, agg.count);
        text = buf;
      }
      emit(text, output);
      return 0;
    }
  } catch (const nerkit::Error& e) {
    std::cerr << "nerkit: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "nerkit: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
