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
// Shared builders for HPSG test entries.

#ifndef HPSG2LMF_TESTS_HELPERS_HPP
#define HPSG2LMF_TESTS_HELPERS_HPP

#include <string>
#include <utility>
#include <vector>

#include "hpsg2lmf/feature_structure.hpp"
#include "hpsg2lmf/fs_xml.hpp"

namespace hpsg2lmf::testing {

inline FeatureValue atom(std::string v) {
  return FeatureValue::atom(std::move(v));
}

inline FeatureStructure avm(
    std::vector<std::pair<std::string, FeatureValue>> features) {
  FeatureStructure fs;
  fs.features = std::move(features);
  return fs;
}

/// One argument element of a valence list.
inline FeatureValue argument(
    const std::string& cat, const std::string& label = "",
    std::vector<std::pair<std::string, FeatureValue>> extra = {}) {
  std::vector<std::pair<std::string, FeatureValue>> features;
  features.emplace_back("CAT", atom(cat));
  if (!label.empty()) features.emplace_back("LABEL", atom(label));
  for (auto& f : extra) features.push_back(std::move(f));
  return FeatureValue::make_avm(avm(std::move(features)));
}

/// Assembles a full entry AVM: PHON at top level, head features under
/// SYNSEM|LOC|CAT|HEAD, extra CAT-level features (VOICE, VALENCE, SPR)
/// beside HEAD and CONT-level features beside CAT.
inline FeatureStructure entry_avm(
    const std::string& phon,
    std::vector<std::pair<std::string, FeatureValue>> head,
    std::vector<std::pair<std::string, FeatureValue>> cat_extra = {},
    std::vector<std::pair<std::string, FeatureValue>> cont = {}) {
  std::vector<std::pair<std::string, FeatureValue>> cat;
  cat.emplace_back("HEAD", FeatureValue::make_avm(avm(std::move(head))));
  for (auto& f : cat_extra) cat.push_back(std::move(f));

  std::vector<std::pair<std::string, FeatureValue>> loc;
  loc.emplace_back("CAT", FeatureValue::make_avm(avm(std::move(cat))));
  if (!cont.empty()) {
    loc.emplace_back("CONT", FeatureValue::make_avm(avm(std::move(cont))));
  }

  return avm({{"PHON", FeatureValue::text(phon)},
              {"SYNSEM", FeatureValue::make_avm(avm(
                             {{"LOC", FeatureValue::make_avm(
                                          avm(std::move(loc)))}}))}});
}

/// A canonical triliteral verb in the past tense; `vowel` is the middle
/// diacritic (fatha by default, kasra for the homograph twin).
inline FeatureStructure verb_avm(const std::string& phon,
                                 const std::string& root,
                                 const std::string& scheme = "fa3ala",
                                 const std::string& lemma = "",
                                 const std::string& denude = "") {
  std::vector<std::pair<std::string, FeatureValue>> head;
  head.emplace_back("MAJ", atom("verbe"));
  if (!denude.empty()) head.emplace_back("DENUDE", atom(denude));
  head.emplace_back("RADICAL", atom(root));
  head.emplace_back("SCHEME", atom(scheme));
  head.emplace_back("VFORM", atom("mutassarf"));
  head.emplace_back("TENSE", atom("madhi"));
  head.emplace_back("LEMMA", atom(lemma.empty() ? phon : lemma));
  return entry_avm(phon, std::move(head));
}

inline std::string lexicon_of(std::vector<FeatureStructure> entries) {
  return serialize_lexicon(entries);
}

}  // namespace hpsg2lmf::testing

#endif  // HPSG2LMF_TESTS_HELPERS_HPP
