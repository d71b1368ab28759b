// Copyright 2026 The nerkit Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef NERKIT_TYPEMAP_HPP
#define NERKIT_TYPEMAP_HPP

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "nerkit/label.hpp"

namespace nerkit {

/// What to do with an entity type the map does not mention.
enum class UnknownPolicy { Keep, Error, Drop };

UnknownPolicy unknown_policy_from_string(std::string_view name);
std::string to_string(UnknownPolicy p);

/// Declarative rename/drop table over entity type names. Renames never
/// chain (a rename target is never itself renamed) and no source is both
/// renamed and dropped, so application is idempotent.
struct TypeMap {
  std::map<std::string, std::string> renames;  // source -> canonical
  std::set<std::string> drops;
  UnknownPolicy unknown_policy = UnknownPolicy::Keep;

  /// Throws DuplicateSource / RenameChain when the invariants do not hold.
  void check() const;
};

/// Loads a JSON document of the form
///   {"renames": {"ORG": ["Organization", "org", ...]},
///    "drops": ["MISC"], "unknown_policy": "keep"}
/// where each renames key is the canonical name and the array lists its
/// source spellings. Identity entries (a canon listing itself) are ignored.
TypeMap load_typemap(std::istream& in);
TypeMap load_typemap_file(const std::string& path);

/// Mention counts touched by apply_typemap, keyed by (source, target) for
/// renames and by source for drops.
struct TypeChangeReport {
  std::map<std::pair<std::string, std::string>, std::size_t> renamed;
  std::map<std::string, std::size_t> dropped;

  std::size_t total_changes() const;
};

/// Renames and drops entity types mention-wise: surviving mention spans are
/// untouched, dropped mentions become OUTSIDE runs, and re-encoding under the
/// sentence's scheme keeps adjacent renamed chunks separated (never merged
/// under BIO). Labels must be valid under `scheme`.
std::pair<Split, TypeChangeReport> apply_typemap(const Split& split,
                                                 const TypeMap& map, Scheme scheme);

/// The LOC/ORG/PER reduction: apply_typemap with the map's unknown_policy
/// forced to Drop. The map's rename targets must lie in {LOC, ORG, PER}.
std::pair<Split, TypeChangeReport> core_types(const Split& split,
                                              const TypeMap& core_map, Scheme scheme);

/// Built-in core map: common spellings of the person, organization, and
/// location families (including GPE variants) mapped onto PER/ORG/LOC,
/// everything else dropped. Overridable by an explicit map file.
TypeMap default_core_typemap();

}  // namespace nerkit

#endif  // NERKIT_TYPEMAP_HPP
