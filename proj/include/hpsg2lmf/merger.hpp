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
// Projection-position identification and entry folding: a projected entry
// becomes a new LMF entry, an inflected form of an existing entry, or the
// lemma of an entry previously seeded by its own inflected form.

#ifndef HPSG2LMF_MERGER_HPP
#define HPSG2LMF_MERGER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpsg2lmf/lmf.hpp"
#include "hpsg2lmf/projection.hpp"
#include "hpsg2lmf/schema.hpp"

namespace hpsg2lmf {

/// Identity tuple deciding whether two projected forms share one LMF
/// entry.  Particles never produce a key.  The fully vocalised canonical
/// orthography participates in identity so that verbs written alike but
/// vocalised differently never merge.
struct MergeKey {
  LexicalCategory category = LexicalCategory::Noun;
  std::vector<std::pair<std::string, std::string>> key_fields;
  std::string vocalized_lemma;

  bool operator==(const MergeKey&) const = default;
  auto operator<=>(const MergeKey&) const = default;

  std::string to_string() const;
};

enum class PlacementKind { NewEntry, AttachInflected, PromoteLemma, FoldDuplicate };

struct Placement {
  PlacementKind kind = PlacementKind::NewEntry;
  std::string entry_id;  // target entry for attach/promote/fold
};

/// Key fields per category: verbs carrying DENUDE use (RADICAL, DENUDE),
/// the rest of the verbs (RADICAL, SCHEME), nouns (NATURE, RADICAL).
/// Absent for particles, for entries that do not admit inflected forms
/// and (with a diagnostic) when a key feature is missing.
std::optional<MergeKey> compute_merge_key(const HpsgEntry& entry,
                                          LexicalCategory category,
                                          bool admits_inflection,
                                          const FeatureRegistry& registry,
                                          DiagnosticList& diagnostics);

/// True when the entry's form-level features all carry canonical-form
/// values.  An entry whose lemma-binding feature differs from its PHON is
/// inflected regardless.
bool is_canonical_form(const HpsgEntry& entry, LexicalCategory category,
                       const FeatureRegistry& registry);

/// Accumulates projected entries into one LMF lexicon.  Placement is a
/// serialisation point; projection of entries may run in parallel and
/// feed a single Merger.
class Merger {
 public:
  Merger(const FeatureRegistry& registry, std::string language = "ar");

  /// Applies one projected entry.  Returns the placement decision taken.
  Placement place(const HpsgEntry& entry, LexicalCategory category,
                  bool admits_inflection, const ProjectionResult& projection,
                  DiagnosticList& diagnostics);

  /// Resolves pending lemmas, sorts entries and forms canonically and
  /// assigns ids.  Must be called exactly once, after the last place().
  LmfLexicalResource finalize(DiagnosticList& diagnostics);

  std::size_t entry_count() const { return entries_.size(); }

  struct Counters {
    std::size_t new_entries = 0;
    std::size_t attached_forms = 0;
    std::size_t promoted_lemmas = 0;
    std::size_t folded_duplicates = 0;
  };
  const Counters& counters() const { return counters_; }

 private:
  LmfLexicalEntry& entry_for(const std::string& id);

  const FeatureRegistry* registry_;
  std::string language_;
  std::vector<LmfLexicalEntry> entries_;
  std::map<MergeKey, std::string> index_;
  Counters counters_;
  std::size_t next_id_ = 0;
};

}  // namespace hpsg2lmf

#endif  // HPSG2LMF_MERGER_HPP
