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
// The declarative rule system mapping HPSG features onto LMF placements,
// and the engine applying it to one entry's feature set.

#ifndef HPSG2LMF_PROJECTION_HPP
#define HPSG2LMF_PROJECTION_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hpsg2lmf/feature_structure.hpp"
#include "hpsg2lmf/schema.hpp"

namespace hpsg2lmf {

enum class TargetClass {
  LexicalEntry,
  Form,
  SyntacticArgument,
  SubcatFrame,
  SemanticArgument,
};

const char* target_class_name(TargetClass t);

/// One attribute placement produced by a rule application.
struct Emission {
  TargetClass target = TargetClass::LexicalEntry;
  std::string attribute;
  std::string value;
  // Distinguishes arguments within a frame ("sb0:arg1") and predicates
  // ("sp0"); empty for plain attribute emissions.
  std::string grouping_key;
  std::string rule_id;      // which rule produced this emission
  std::string source_feature;
  bool passthrough = false;  // unregistered feature preserved verbatim

  bool operator==(const Emission&) const = default;
};

/// A terminal feature reachable from the entry body by descending through
/// structural containers only.
struct FlatFeature {
  std::string name;
  const FeatureValue* value = nullptr;
};

/// Flattens an entry body to its terminal features in document order.
std::vector<FlatFeature> flatten_features(const FeatureStructure& body,
                                          const FeatureRegistry& registry);

/// Mutable state threaded through one entry's projection: the emission
/// stream, diagnostics and subcat-frame grouping counters.
struct ProjectionContext {
  LexicalCategory category = LexicalCategory::Noun;
  bool admits_inflection = false;
  const FeatureRegistry* registry = nullptr;

  std::vector<Emission> emissions;
  DiagnosticList diagnostics;

  std::size_t shared_frame_args = 0;  // arguments in the implicit frame sb0
  std::size_t frame_count = 1;        // next explicit frame ordinal
  std::size_t predicate_count = 0;

  std::size_t matched_features = 0;
  std::size_t passthrough_features = 0;
  std::size_t skipped_empty = 0;
};

struct ProjectionRule {
  std::string rule_id;
  std::function<bool(const FlatFeature&, const FeatureDescriptor*,
                     const ProjectionContext&)>
      matches;
  std::function<void(const FlatFeature&, const FeatureDescriptor*,
                     ProjectionContext&)>
      apply;
};

/// The built-in rule table, in match-priority order: R9m (particles and
/// non-inflecting entries), the R5m morphological family, R1syn, R2syn,
/// R1sem, and the passthrough fallback.
std::vector<ProjectionRule> builtin_rules();

/// Data-category mapping from HPSG feature name to LMF attribute name.
/// Features without a published equivalent map to x-arabic: namespaced
/// custom attributes.  Unmapped names are absent.
std::map<std::string, std::string> mapping_table();

struct ProjectionResult {
  std::vector<Emission> emissions;
  DiagnosticList diagnostics;
  std::size_t matched_features = 0;
  std::size_t passthrough_features = 0;
  std::size_t skipped_empty = 0;  // empty NUCLEUS and similar
};

struct ProjectionOptions {
  // Optional value-spelling translation applied to emitted values.
  std::map<std::string, std::string> value_map;
  // Optional per-feature LMF attribute overrides.
  std::map<std::string, std::string> attribute_overrides;
};

/// Projects every feature of one entry.  Pure function of its inputs:
/// each terminal feature yields matched emissions, a passthrough emission
/// plus a loss diagnostic, or (for empty composites) a counted skip.
ProjectionResult project_entry(const HpsgEntry& entry,
                               LexicalCategory category,
                               bool admits_inflection,
                               const FeatureRegistry& registry,
                               const std::vector<ProjectionRule>& rules,
                               const ProjectionOptions& options = {});

/// Attribute-name prefix for preserved unregistered features.
inline constexpr std::string_view kPassthroughPrefix = "x-hpsg:";

/// Prefix for Arabic data categories with no published LMF equivalent.
inline constexpr std::string_view kCustomPrefix = "x-arabic:";

/// Name of the lemma-binding feature carried by inflected entries to tie
/// them to their canonical form.
inline constexpr std::string_view kLemmaBindingFeature = "LEMMA";

}  // namespace hpsg2lmf

#endif  // HPSG2LMF_PROJECTION_HPP
