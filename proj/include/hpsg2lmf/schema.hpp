// Copyright 2026 The hpsg2lmf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Registry of the Arabic HPSG feature inventory: for each feature its
// linguistic layer, its scope (entry vs form), the lexical categories it
// applies to, its value domain and its LMF target attribute.

#ifndef HPSG2LMF_SCHEMA_HPP
#define HPSG2LMF_SCHEMA_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hpsg2lmf/diagnostics.hpp"
#include "hpsg2lmf/feature_structure.hpp"

namespace hpsg2lmf {

enum class LexicalCategory { Noun, Verb, Particle };

const char* category_name(LexicalCategory c);

enum class FeatureLayer { Morphological, Syntactic, Semantic };

enum class FeatureScope { EntryLevel, FormLevel };

struct FeatureDescriptor {
  std::string name;
  FeatureLayer layer = FeatureLayer::Morphological;
  FeatureScope scope = FeatureScope::EntryLevel;
  std::set<LexicalCategory> categories;  // empty set means all categories
  std::vector<std::string> value_domain;  // empty means open domain
  std::string lmf_attribute;  // empty means passthrough only
  // Structural containers (SYNSEM, LOC, CAT, ...) group other features and
  // are descended through, never projected themselves.
  bool structural = false;
  // Values considered canonical-form markers for form-level features
  // (e.g. non-diminutive); used by the merger's canonical test.
  std::vector<std::string> canonical_values;
  // Values that negate inflectability (NFORM ghair mutassarf and the
  // configurable VFORM equivalent).
  std::vector<std::string> non_inflecting_values;

  bool applies_to(LexicalCategory c) const {
    return categories.empty() || categories.count(c) > 0;
  }
  bool in_domain(std::string_view value) const;
  bool is_canonical_value(std::string_view value) const;
};

class FeatureRegistry {
 public:
  /// The complete built-in table covering the whole Arabic HPSG feature
  /// inventory, fully classified.
  static FeatureRegistry builtin();

  const FeatureDescriptor* lookup(std::string_view name) const;

  /// Adds or replaces one descriptor.
  void register_feature(FeatureDescriptor descriptor);

  /// Applies a line-oriented override file on top of the current table
  /// (see docs in README: name, layer, scope, categories, lmf attribute,
  /// value domain).  Throws std::runtime_error on a malformed line.
  void apply_overrides(std::string_view text);

  std::vector<const FeatureDescriptor*> all() const;

 private:
  std::map<std::string, FeatureDescriptor, std::less<>> table_;
};

/// Maps the entry's MAJ value to its lexical category.  Recognises the
/// value spellings used across the source lexica (French, English and
/// Arabic).  Unrecognised values yield a diagnostic and no category.
std::optional<LexicalCategory> classify(const HpsgEntry& entry,
                                        DiagnosticList& diagnostics);

/// Whether the entry can head a family of inflected forms.  Particles
/// never do; nouns and verbs are decided by NFORM / VFORM.  A missing
/// NFORM/VFORM yields a diagnostic and false (the entry stands alone).
bool admits_inflected_forms(const HpsgEntry& entry, LexicalCategory category,
                            const FeatureRegistry& registry,
                            DiagnosticList& diagnostics);

}  // namespace hpsg2lmf

#endif  // HPSG2LMF_SCHEMA_HPP
