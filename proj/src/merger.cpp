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

#include "hpsg2lmf/merger.hpp"

#include <algorithm>
#include <sstream>

namespace hpsg2lmf {

namespace {

std::string scalar_of(const FeatureValue* value) {
  if (value == nullptr) return "";
  if (value->is_atom() || value->is_text()) return value->scalar;
  return "";
}

// Canonical content key used for deterministic ordering of forms, frames
// and entries, independent of input order.
std::string form_sort_key(const LmfForm& form) {
  std::ostringstream out;
  out << form.orthography;
  for (const auto& [name, value] : form.attributes) {
    out << '\x01' << name << '\x02' << value;
  }
  return out.str();
}

std::string frame_sort_key(const SubcatFrame& frame) {
  std::ostringstream out;
  for (const auto& arg : frame.arguments) {
    out << '\x01' << arg.function << '\x02' << arg.constituent << '\x02'
        << arg.label;
    for (const auto& [name, value] : arg.attributes) {
      out << '\x03' << name << '\x04' << value;
    }
  }
  return out.str();
}

std::string predicate_sort_key(const SemanticPredicate& predicate) {
  std::ostringstream out;
  for (const auto& arg : predicate.arguments) {
    out << '\x01' << arg.role << '\x02' << arg.value;
  }
  return out.str();
}

std::string entry_sort_key(const LmfLexicalEntry& entry) {
  std::ostringstream out;
  out << entry.lemma.orthography;
  for (const auto& [name, value] : entry.attributes) {
    out << '\x01' << name << '\x02' << value;
  }
  for (const auto& form : entry.inflected_forms) {
    out << '\x05' << form_sort_key(form);
  }
  return out.str();
}

// What one projected HPSG entry contributes to the LMF side.
struct ProjectedPieces {
  AttributeMap entry_attributes;
  LmfForm form;  // the entry's own surface form and form-level data
  std::vector<SubcatFrame> frames;
  std::vector<SemanticPredicate> predicates;
};

ProjectedPieces assemble(const HpsgEntry& entry,
                         const ProjectionResult& projection) {
  ProjectedPieces out;
  out.form.orthography = entry.phon;

  // Frame and predicate groups keyed by grouping prefix, in first-seen
  // order.
  std::vector<std::pair<std::string, SubcatFrame>> frames;
  std::vector<std::pair<std::string, SemanticPredicate>> predicates;
  std::vector<std::pair<std::string, SyntacticArgument>> arguments;

  auto argument_for = [&](const std::string& key) -> SyntacticArgument& {
    for (auto& [k, arg] : arguments) {
      if (k == key) return arg;
    }
    arguments.emplace_back(key, SyntacticArgument{});
    return arguments.back().second;
  };
  auto predicate_for = [&](const std::string& key) -> SemanticPredicate& {
    for (auto& [k, p] : predicates) {
      if (k == key) return p;
    }
    predicates.emplace_back(key, SemanticPredicate{});
    return predicates.back().second;
  };

  for (const auto& emission : projection.emissions) {
    switch (emission.target) {
      case TargetClass::LexicalEntry:
        out.entry_attributes[emission.attribute] = emission.value;
        break;
      case TargetClass::Form:
        if (emission.attribute == "orth") {
          out.form.orthography = emission.value;
        } else {
          out.form.attributes[emission.attribute] = emission.value;
        }
        break;
      case TargetClass::SyntacticArgument: {
        SyntacticArgument& arg = argument_for(emission.grouping_key);
        if (emission.attribute == "function") {
          arg.function = emission.value;
        } else if (emission.attribute == "constituent") {
          arg.constituent = emission.value;
        } else if (emission.attribute == "label") {
          arg.label = emission.value;
        } else {
          arg.attributes[emission.attribute] = emission.value;
        }
        break;
      }
      case TargetClass::SubcatFrame:
        break;  // frames materialise from their arguments
      case TargetClass::SemanticArgument: {
        std::string key = emission.grouping_key.empty()
                              ? "sp0"
                              : emission.grouping_key;
        predicate_for(key).arguments.push_back(
            {emission.attribute, emission.value, ""});
        break;
      }
    }
  }

  // Arguments fold into frames by their grouping prefix ("sb0:arg1").
  for (auto& [key, arg] : arguments) {
    std::string frame_key = key.substr(0, key.find(':'));
    SubcatFrame* frame = nullptr;
    for (auto& [k, f] : frames) {
      if (k == frame_key) frame = &f;
    }
    if (frame == nullptr) {
      frames.emplace_back(frame_key, SubcatFrame{});
      frame = &frames.back().second;
    }
    frame->arguments.push_back(std::move(arg));
  }

  for (auto& [key, frame] : frames) out.frames.push_back(std::move(frame));
  for (auto& [key, p] : predicates) out.predicates.push_back(std::move(p));
  return out;
}

template <typename T, typename KeyFn>
void fold_unique(std::vector<T>& existing, std::vector<T> incoming,
                 KeyFn key) {
  for (auto& item : incoming) {
    bool present = std::any_of(
        existing.begin(), existing.end(),
        [&](const T& e) { return key(e) == key(item); });
    if (!present) existing.push_back(std::move(item));
  }
}

}  // namespace

std::string MergeKey::to_string() const {
  std::ostringstream out;
  out << category_name(category);
  for (const auto& [name, value] : key_fields) {
    out << "," << name << "=" << value;
  }
  out << ",lemma=" << vocalized_lemma;
  return out.str();
}

bool is_canonical_form(const HpsgEntry& entry, LexicalCategory category,
                       const FeatureRegistry& registry) {
  if (const FeatureValue* binding =
          find_first(entry.body, kLemmaBindingFeature)) {
    return scalar_of(binding) == entry.phon;
  }
  if (category == LexicalCategory::Particle) return true;

  // Without a binding feature, the derivational form-level features
  // decide: a canonical form carries only canonical-marker values.
  for (const char* name : {"DIMINUTIVE", "RELATIVE", "DEFN"}) {
    const FeatureDescriptor* descriptor = registry.lookup(name);
    if (descriptor == nullptr || descriptor->canonical_values.empty()) {
      continue;
    }
    const FeatureValue* value = find_first(entry.body, name);
    if (value != nullptr && (value->is_atom() || value->is_text()) &&
        !descriptor->is_canonical_value(value->scalar)) {
      return false;
    }
  }
  return true;
}

std::optional<MergeKey> compute_merge_key(const HpsgEntry& entry,
                                          LexicalCategory category,
                                          bool admits_inflection,
                                          const FeatureRegistry& registry,
                                          DiagnosticList& diagnostics) {
  if (category == LexicalCategory::Particle) return std::nullopt;
  if (!admits_inflection) return std::nullopt;

  auto feature = [&](const char* name) {
    return scalar_of(find_first(entry.body, name));
  };

  MergeKey key;
  key.category = category;

  std::string radical = feature("RADICAL");
  if (radical.empty()) {
    diagnostics.push_back({DiagKind::MissingFeature,
                           "no RADICAL value; entry stands alone",
                           entry.ordinal, ""});
    return std::nullopt;
  }

  if (category == LexicalCategory::Verb) {
    // Canonical-or-its-inflections verbs key on (RADICAL, DENUDE); the
    // rest of the verbs on (RADICAL, SCHEME).
    std::string denude = feature("DENUDE");
    if (!denude.empty()) {
      key.key_fields = {{"RADICAL", radical}, {"DENUDE", denude}};
    } else {
      std::string scheme = feature("SCHEME");
      if (scheme.empty()) {
        diagnostics.push_back({DiagKind::MissingFeature,
                               "verb lacks both DENUDE and SCHEME; entry "
                               "stands alone",
                               entry.ordinal, ""});
        return std::nullopt;
      }
      key.key_fields = {{"RADICAL", radical}, {"SCHEME", scheme}};
    }
  } else {
    std::string nature = feature("NATURE");
    if (nature.empty()) {
      diagnostics.push_back({DiagKind::MissingFeature,
                             "noun lacks NATURE; entry stands alone",
                             entry.ordinal, ""});
      return std::nullopt;
    }
    key.key_fields = {{"NATURE", nature}, {"RADICAL", radical}};
  }

  // Vocalisation is part of identity: homographs with different vowel
  // patterns must never merge.
  if (is_canonical_form(entry, category, registry)) {
    key.vocalized_lemma = entry.phon;
  } else {
    std::string binding = scalar_of(find_first(entry.body,
                                               kLemmaBindingFeature));
    if (binding.empty()) {
      diagnostics.push_back(
          {DiagKind::MissingBinding,
           "inflected form carries no lemma-binding feature; it cannot "
           "join its canonical form",
           entry.ordinal, ""});
    }
    key.vocalized_lemma = binding;
  }
  return key;
}

Merger::Merger(const FeatureRegistry& registry, std::string language)
    : registry_(&registry), language_(std::move(language)) {}

LmfLexicalEntry& Merger::entry_for(const std::string& id) {
  for (auto& entry : entries_) {
    if (entry.id == id) return entry;
  }
  throw std::logic_error("merge index points at unknown entry " + id);
}

Placement Merger::place(const HpsgEntry& entry, LexicalCategory category,
                        bool admits_inflection,
                        const ProjectionResult& projection,
                        DiagnosticList& diagnostics) {
  ProjectedPieces pieces = assemble(entry, projection);
  std::optional<MergeKey> key = compute_merge_key(
      entry, category, admits_inflection, *registry_, diagnostics);
  const bool canonical = is_canonical_form(entry, category, *registry_);

  auto fold_attributes = [&](LmfLexicalEntry& target) {
    for (const auto& [name, value] : pieces.entry_attributes) {
      auto [it, inserted] = target.attributes.emplace(name, value);
      if (!inserted && it->second != value) {
        diagnostics.push_back(
            {DiagKind::MergeConflict,
             "attribute '" + name + "': keeping '" + it->second +
                 "', dropping '" + value + "'",
             entry.ordinal, target.id});
      }
    }
    fold_unique(target.syntactic_behaviours, std::move(pieces.frames),
                frame_sort_key);
    fold_unique(target.senses, std::move(pieces.predicates),
                predicate_sort_key);
  };

  auto make_new_entry = [&]() -> Placement {
    LmfLexicalEntry created;
    created.id = "tmp" + std::to_string(next_id_++);
    created.category = category;
    created.attributes = std::move(pieces.entry_attributes);
    created.syntactic_behaviours = std::move(pieces.frames);
    created.senses = std::move(pieces.predicates);
    if (canonical) {
      created.lemma = std::move(pieces.form);
      created.lemma.kind = LmfForm::Kind::Lemma;
    } else {
      created.lemma_pending = true;
      pieces.form.kind = LmfForm::Kind::Inflected;
      created.inflected_forms.push_back(std::move(pieces.form));
    }
    std::string id = created.id;
    entries_.push_back(std::move(created));
    if (key) index_.emplace(*key, id);
    ++counters_.new_entries;
    return {PlacementKind::NewEntry, id};
  };

  if (!key) return make_new_entry();

  auto found = index_.find(*key);
  if (found == index_.end()) return make_new_entry();

  LmfLexicalEntry& target = entry_for(found->second);

  if (!canonical) {
    pieces.form.kind = LmfForm::Kind::Inflected;
    bool duplicate = std::any_of(
        target.inflected_forms.begin(), target.inflected_forms.end(),
        [&](const LmfForm& f) {
          return form_sort_key(f) == form_sort_key(pieces.form);
        });
    if (duplicate) {
      diagnostics.push_back({DiagKind::DuplicateForm,
                             "inflected form '" + pieces.form.orthography +
                                 "' already attached",
                             entry.ordinal, target.id});
      fold_attributes(target);
      ++counters_.folded_duplicates;
      return {PlacementKind::FoldDuplicate, target.id};
    }
    LmfForm incoming = pieces.form;
    fold_attributes(target);
    target.inflected_forms.push_back(std::move(incoming));
    ++counters_.attached_forms;
    return {PlacementKind::AttachInflected, target.id};
  }

  if (target.lemma_pending) {
    LmfForm incoming = pieces.form;
    incoming.kind = LmfForm::Kind::Lemma;
    fold_attributes(target);
    target.lemma = std::move(incoming);
    target.lemma_pending = false;
    ++counters_.promoted_lemmas;
    return {PlacementKind::PromoteLemma, target.id};
  }

  diagnostics.push_back({DiagKind::DuplicateCanonical,
                         "second canonical form '" + entry.phon +
                             "' for merge key " + key->to_string(),
                         entry.ordinal, target.id});
  fold_attributes(target);
  ++counters_.folded_duplicates;
  return {PlacementKind::FoldDuplicate, target.id};
}

LmfLexicalResource Merger::finalize(DiagnosticList& diagnostics) {
  for (auto& entry : entries_) {
    if (entry.lemma_pending) {
      // The canonical form never arrived.  The binding feature's value
      // (when the family carried one) or the smallest inflected
      // orthography stands in as provisional lemma.
      std::string binding;
      if (auto it = entry.attributes.find("x-arabic:lemma");
          it != entry.attributes.end()) {
        binding = it->second;
      }
      if (!binding.empty()) {
        entry.lemma = LmfForm{binding, {}, LmfForm::Kind::Lemma};
      } else {
        auto smallest = std::min_element(
            entry.inflected_forms.begin(), entry.inflected_forms.end(),
            [](const LmfForm& a, const LmfForm& b) {
              return form_sort_key(a) < form_sort_key(b);
            });
        entry.lemma = *smallest;
        entry.lemma.kind = LmfForm::Kind::Lemma;
        entry.inflected_forms.erase(smallest);
      }
      entry.lemma_pending = false;
      diagnostics.push_back(
          {DiagKind::LemmaPending,
           "no canonical form arrived for lemma '" +
               entry.lemma.orthography + "'; provisional lemma used",
           std::nullopt, entry.id});
    }

    std::sort(entry.inflected_forms.begin(), entry.inflected_forms.end(),
              [](const LmfForm& a, const LmfForm& b) {
                return form_sort_key(a) < form_sort_key(b);
              });
    std::sort(entry.syntactic_behaviours.begin(),
              entry.syntactic_behaviours.end(),
              [](const SubcatFrame& a, const SubcatFrame& b) {
                return frame_sort_key(a) < frame_sort_key(b);
              });
    std::sort(entry.senses.begin(), entry.senses.end(),
              [](const SemanticPredicate& a, const SemanticPredicate& b) {
                return predicate_sort_key(a) < predicate_sort_key(b);
              });

    // Syntax-semantics linking via co-labels: a semantic argument whose
    // value names a labelled syntactic argument points at it.
    for (auto& predicate : entry.senses) {
      for (auto& argument : predicate.arguments) {
        for (std::size_t f = 0; f < entry.syntactic_behaviours.size(); ++f) {
          const auto& args = entry.syntactic_behaviours[f].arguments;
          for (std::size_t a = 0; a < args.size(); ++a) {
            if (!args[a].label.empty() && args[a].label == argument.value) {
              argument.link =
                  "sb" + std::to_string(f) + ":arg" + std::to_string(a);
            }
          }
        }
      }
    }
  }

  std::sort(entries_.begin(), entries_.end(),
            [](const LmfLexicalEntry& a, const LmfLexicalEntry& b) {
              auto rank = [](const LmfLexicalEntry& e) {
                return e.category ? static_cast<int>(*e.category) : 3;
              };
              if (rank(a) != rank(b)) return rank(a) < rank(b);
              return entry_sort_key(a) < entry_sort_key(b);
            });

  std::map<std::string, std::size_t> ordinals;
  for (auto& entry : entries_) {
    std::string category =
        entry.category ? category_name(*entry.category) : "other";
    entry.id = language_ + ":" + category + ":" +
               std::to_string(ordinals[category]++);
  }

  LmfLexicalResource resource;
  LmfLexicon lexicon;
  lexicon.language = language_;
  lexicon.entries = std::move(entries_);
  resource.lexicons.push_back(std::move(lexicon));
  entries_.clear();
  index_.clear();
  return resource;
}

}  // namespace hpsg2lmf
