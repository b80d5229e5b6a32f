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
// Object model for the LMF core plus the morphological, syntactic and
// semantic extensions.

#ifndef HPSG2LMF_LMF_HPP
#define HPSG2LMF_LMF_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hpsg2lmf/diagnostics.hpp"
#include "hpsg2lmf/schema.hpp"

namespace hpsg2lmf {

/// Named attribute set with unique names and stable (sorted) iteration.
using AttributeMap = std::map<std::string, std::string, std::less<>>;

struct LmfForm {
  enum class Kind { Lemma, Inflected };

  std::string orthography;
  AttributeMap attributes;
  Kind kind = Kind::Inflected;

  bool operator==(const LmfForm&) const = default;
};

struct SyntacticArgument {
  std::string function;     // subject, object, specifier, ...
  std::string constituent;  // NP, VP, ...
  AttributeMap attributes;  // case, gender, number
  std::string label;        // co-labelling with semantic arguments (X, Y)

  bool operator==(const SyntacticArgument&) const = default;
};

struct SubcatFrame {
  std::string id;
  std::vector<SyntacticArgument> arguments;

  bool operator==(const SubcatFrame& o) const { return arguments == o.arguments; }
};

struct SemanticArgument {
  std::string role;  // agent-noun, patient-noun, ...
  std::string value;
  std::string link;  // id of the co-labelled syntactic argument, if any

  bool operator==(const SemanticArgument&) const = default;
};

struct SemanticPredicate {
  std::string id;
  std::vector<SemanticArgument> arguments;

  bool operator==(const SemanticPredicate& o) const {
    return arguments == o.arguments;
  }
};

struct LmfLexicalEntry {
  std::string id;
  AttributeMap attributes;  // partOfSpeech, root, grammaticalCategory, ...
  LmfForm lemma;            // kind == Lemma
  std::vector<LmfForm> inflected_forms;
  std::vector<SubcatFrame> syntactic_behaviours;
  std::vector<SemanticPredicate> senses;

  // Merger bookkeeping, never serialised.
  std::optional<LexicalCategory> category;
  bool lemma_pending = false;

  bool operator==(const LmfLexicalEntry& o) const;
};

struct LmfLexicon {
  std::string language = "ar";
  std::vector<LmfLexicalEntry> entries;

  bool operator==(const LmfLexicon&) const = default;
};

struct LmfLexicalResource {
  AttributeMap global_info;
  std::vector<LmfLexicon> lexicons;

  bool operator==(const LmfLexicalResource&) const = default;
};

struct Violation {
  std::string entry_id;
  std::string description;
};

/// Checks every model invariant: at least one lexicon, non-empty lexicons,
/// unique entry ids, lemma present exactly once per entry, non-empty
/// orthographies, frames with at least one argument, predicates with at
/// least one argument.
std::vector<Violation> validate(const LmfLexicalResource& resource);

}  // namespace hpsg2lmf

#endif  // HPSG2LMF_LMF_HPP
