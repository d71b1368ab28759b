// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#include "nerkit/typemap.hpp"

#include <fstream>
#include <istream>

#include <json.hpp>

#include "nerkit/codec.hpp"
#include "nerkit/error.hpp"

namespace nerkit {

UnknownPolicy unknown_policy_from_string(std::string_view name) {
  if (name == "keep") return UnknownPolicy::Keep;
  if (name == "error") return UnknownPolicy::Error;
  if (name == "drop") return UnknownPolicy::Drop;
  throw Error("unknown policy: " + std::string(name) + " (want keep|error|drop)");
}

std::string to_string(UnknownPolicy p) {
  switch (p) {
    case UnknownPolicy::Keep: return "keep";
    case UnknownPolicy::Error: return "error";
    case UnknownPolicy::Drop: return "drop";
  }
  return "?";
}

void TypeMap::check() const {
  for (const auto& [source, target] : renames) {
    if (drops.contains(source)) {
      throw DuplicateSource("type \"" + source + "\" is both renamed and dropped");
    }
    if (drops.contains(target)) {
      throw DuplicateSource("type \"" + source + "\" is renamed to dropped type \"" +
                            target + "\"");
    }
    if (renames.contains(target)) {
      throw RenameChain("rename chain: \"" + source + "\" -> \"" + target +
                        "\" -> \"" + renames.at(target) + "\"");
    }
  }
}

TypeMap load_typemap(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("type map: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("type map: expected a JSON object");

  TypeMap map;
  if (doc.contains("renames")) {
    const auto& renames = doc["renames"];
    if (!renames.is_object()) throw ParseError("type map: \"renames\" must be an object");
    for (const auto& [canon, aliases] : renames.items()) {
      if (!aliases.is_array()) {
        throw ParseError("type map: renames entry \"" + canon + "\" must be an array");
      }
      for (const auto& alias : aliases) {
        if (!alias.is_string()) {
          throw ParseError("type map: aliases of \"" + canon + "\" must be strings");
        }
        const std::string source = alias.get<std::string>();
        if (source == canon) continue;  // identity entries are no-ops
        const auto [it, inserted] = map.renames.emplace(source, canon);
        if (!inserted && it->second != canon) {
          throw DuplicateSource("type \"" + source + "\" renamed to both \"" +
                                it->second + "\" and \"" + canon + "\"");
        }
        if (!inserted) {
          throw DuplicateSource("type \"" + source + "\" listed twice under \"" +
                                canon + "\"");
        }
      }
    }
  }
  if (doc.contains("drops")) {
    const auto& drops = doc["drops"];
    if (!drops.is_array()) throw ParseError("type map: \"drops\" must be an array");
    for (const auto& d : drops) {
      if (!d.is_string()) throw ParseError("type map: drops must be strings");
      if (!map.drops.insert(d.get<std::string>()).second) {
        throw DuplicateSource("type \"" + d.get<std::string>() + "\" dropped twice");
      }
    }
  }
  if (doc.contains("unknown_policy")) {
    if (!doc["unknown_policy"].is_string()) {
      throw ParseError("type map: \"unknown_policy\" must be a string");
    }
    map.unknown_policy = unknown_policy_from_string(doc["unknown_policy"].get<std::string>());
  }
  map.check();
  return map;
}

TypeMap load_typemap_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open type map: " + path);
  return load_typemap(in);
}

std::size_t TypeChangeReport::total_changes() const {
  std::size_t n = 0;
  for (const auto& [key, count] : renamed) n += count;
  for (const auto& [key, count] : dropped) n += count;
  return n;
}

namespace {

std::pair<Split, TypeChangeReport> apply_typemap_impl(const Split& split,
                                                      const TypeMap& map, Scheme scheme,
                                                      const std::set<std::string>& keep) {
  map.check();
  std::set<std::string> known = keep;
  for (const auto& [source, target] : map.renames) known.insert(target);

  Split out;
  out.reserve(split.size());
  TypeChangeReport report;
  for (std::size_t s = 0; s < split.size(); ++s) {
    const TaggedSentence& sentence = split[s];
    const auto mentions = decode(sentence.labels, scheme, s);
    std::vector<Mention> kept;
    kept.reserve(mentions.size());
    for (Mention m : mentions) {
      if (const auto it = map.renames.find(m.entity_type); it != map.renames.end()) {
        ++report.renamed[{m.entity_type, it->second}];
        m.entity_type = it->second;
        kept.push_back(std::move(m));
        continue;
      }
      if (map.drops.contains(m.entity_type)) {
        ++report.dropped[m.entity_type];
        continue;
      }
      if (!known.contains(m.entity_type)) {
        switch (map.unknown_policy) {
          case UnknownPolicy::Keep:
            break;
          case UnknownPolicy::Drop:
            ++report.dropped[m.entity_type];
            continue;
          case UnknownPolicy::Error:
            throw UnknownType("sentence " + std::to_string(s) + ": type \"" +
                              m.entity_type + "\" is not covered by the map");
        }
      }
      kept.push_back(std::move(m));
    }
    TaggedSentence mapped = sentence;
    mapped.labels = encode(kept, sentence.labels.size(), scheme);
    out.push_back(std::move(mapped));
  }
  return {std::move(out), std::move(report)};
}

}  // namespace

std::pair<Split, TypeChangeReport> apply_typemap(const Split& split,
                                                 const TypeMap& map, Scheme scheme) {
  return apply_typemap_impl(split, map, scheme, {});
}

std::pair<Split, TypeChangeReport> core_types(const Split& split,
                                              const TypeMap& core_map, Scheme scheme) {
  static const std::set<std::string> kCore = {"LOC", "ORG", "PER"};
  for (const auto& [source, target] : core_map.renames) {
    if (!kCore.contains(target)) {
      throw Error("core map renames \"" + source + "\" to non-core type \"" +
                  target + "\"");
    }
  }
  TypeMap map = core_map;
  map.unknown_policy = UnknownPolicy::Drop;
  return apply_typemap_impl(split, map, scheme, kCore);
}

TypeMap default_core_typemap() {
  TypeMap map;
  const auto add = [&](const std::string& canon,
                       std::initializer_list<const char*> aliases) {
    for (const char* a : aliases) map.renames.emplace(a, canon);
  };
  add("PER", {"PERSON", "PERS", "Person", "person", "per", "NEP"});
  add("ORG", {"Organization", "ORGANIZATION", "ORGANISATION", "Organisation", "org",
              "NEO", "GPE-ORG", "GPE_ORG"});
  add("LOC", {"LOCATION", "Location", "location", "loc", "NEL", "GPE", "GPE-LOC",
              "GPE_LOC"});
  map.unknown_policy = UnknownPolicy::Drop;
  map.check();
  return map;
}

}  // namespace nerkit
