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

#include "hpsg2lmf/lmf.hpp"

#include <set>

namespace hpsg2lmf {

bool LmfLexicalEntry::operator==(const LmfLexicalEntry& o) const {
  // Identity is content, not the synthesised id or merger bookkeeping.
  return attributes == o.attributes && lemma == o.lemma &&
         inflected_forms == o.inflected_forms &&
         syntactic_behaviours == o.syntactic_behaviours && senses == o.senses;
}

std::vector<Violation> validate(const LmfLexicalResource& resource) {
  std::vector<Violation> out;
  if (resource.lexicons.empty()) {
    out.push_back({"", "resource contains no lexicon"});
  }
  for (const auto& lexicon : resource.lexicons) {
    if (lexicon.entries.empty()) {
      out.push_back({"", "lexicon '" + lexicon.language +
                             "' contains no lexical entry"});
    }
    std::set<std::string> seen_ids;
    for (const auto& entry : lexicon.entries) {
      if (!entry.id.empty() && !seen_ids.insert(entry.id).second) {
        out.push_back({entry.id, "duplicate entry id"});
      }
      if (entry.lemma.kind != LmfForm::Kind::Lemma) {
        out.push_back({entry.id, "lemma slot does not hold a lemma form"});
      }
      if (entry.lemma.orthography.empty()) {
        out.push_back({entry.id, "lemma orthography is empty"});
      }
      for (const auto& form : entry.inflected_forms) {
        if (form.kind == LmfForm::Kind::Lemma) {
          out.push_back({entry.id, "second lemma form in inflected list"});
        }
        if (form.orthography.empty()) {
          out.push_back({entry.id, "inflected form with empty orthography"});
        }
      }
      for (const auto& frame : entry.syntactic_behaviours) {
        if (frame.arguments.empty()) {
          out.push_back({entry.id, "subcategorisation frame with no argument"});
        }
        for (const auto& arg : frame.arguments) {
          if (arg.function.empty() || arg.constituent.empty()) {
            out.push_back(
                {entry.id, "syntactic argument missing function/constituent"});
          }
        }
      }
      for (const auto& predicate : entry.senses) {
        if (predicate.arguments.empty()) {
          out.push_back({entry.id, "semantic predicate with no argument"});
        }
      }
    }
  }
  return out;
}

}  // namespace hpsg2lmf
