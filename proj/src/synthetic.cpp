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
// Seeded synthetic HPSG lexicon generator: verb families with inflected
// members, nouns across NATURE subcategories and both particle AVM models.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "hpsg2lmf/fs_xml.hpp"
#include "hpsg2lmf/pipeline.hpp"

namespace hpsg2lmf {

namespace {

using Rng = std::mt19937_64;

const std::vector<std::string>& consonants() {
  static const std::vector<std::string> letters = {
      "ب", "ت", "ث", "ج", "ح", "خ", "د", "ذ", "ر", "ز", "س", "ش",
      "ص", "ض", "ط", "ظ", "ع", "غ", "ف", "ق", "ك", "ل", "م", "ن"};
  return letters;
}

// Short vowel diacritics.
const std::string kFatha = "َ";
const std::string kKasra = "ِ";
const std::string kDamma = "ُ";

std::size_t pick(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

// Arabic-Indic digits, used to uniquify surface forms drawn from the
// closed particle class.
std::string arabic_digits(std::size_t n) {
  static const char* digits[] = {"٠", "١", "٢", "٣", "٤",
                                 "٥", "٦", "٧", "٨", "٩"};
  std::string out;
  for (char c : std::to_string(n)) out += digits[c - '0'];
  return out;
}

// Surface forms are globally unique so that every input form has exactly
// one place in the converted resource.
std::string unique_phon(const std::string& base,
                        std::set<std::string>& used) {
  if (used.insert(base).second) return base;
  for (std::size_t n = 2;; ++n) {
    std::string candidate = base + arabic_digits(n);
    if (used.insert(candidate).second) return candidate;
  }
}

FeatureValue atom(std::string v) { return FeatureValue::atom(std::move(v)); }

FeatureStructure avm(
    std::vector<std::pair<std::string, FeatureValue>> features) {
  FeatureStructure fs;
  fs.features = std::move(features);
  return fs;
}

// An argument element of a valence list: category plus agreement.
FeatureValue argument_avm(const std::string& cat, const std::string& label,
                          std::vector<std::pair<std::string, FeatureValue>>
                              extra = {}) {
  std::vector<std::pair<std::string, FeatureValue>> features;
  features.emplace_back("CAT", atom(cat));
  if (!label.empty()) features.emplace_back("LABEL", atom(label));
  for (auto& f : extra) features.push_back(std::move(f));
  return FeatureValue::make_avm(avm(std::move(features)));
}

struct VerbShape {
  std::vector<std::string> root_letters;
  std::string root;       // letters joined with spaces
  std::string canonical;  // vocalised surface form
  std::string scheme;
  std::string denude;
  std::string cform;
};

VerbShape make_verb_shape(Rng& rng) {
  VerbShape shape;
  std::size_t letters = pick(rng, 10) == 0 ? 4 : 3;
  shape.cform = letters == 3 ? "thulathi" : "rubai";
  for (std::size_t i = 0; i < letters; ++i) {
    shape.root_letters.push_back(consonants()[pick(rng, consonants().size())]);
    if (i > 0) shape.root += " ";
    shape.root += shape.root_letters.back();
  }
  // Two vowel patterns on the middle consonant give homograph families
  // that differ only in vocalisation.
  bool kasra = pick(rng, 2) == 0;
  shape.scheme = kasra ? "fa3ila" : "fa3ala";
  const std::string& middle = kasra ? kKasra : kFatha;
  for (std::size_t i = 0; i < shape.root_letters.size(); ++i) {
    shape.canonical += shape.root_letters[i];
    shape.canonical += (i == 1 ? middle : kFatha);
  }
  shape.denude = pick(rng, 4) == 0 ? "mazid" : "mujarrid";
  return shape;
}

FeatureStructure verb_entry(const VerbShape& shape, const std::string& phon,
                            const std::string& scheme,
                            const std::string& tense, bool nucleus) {
  std::vector<std::pair<std::string, FeatureValue>> head;
  head.emplace_back("MAJ", atom("verbe"));
  head.emplace_back("CFORM", atom(shape.cform));
  head.emplace_back("DENUDE", atom(shape.denude));
  head.emplace_back("RADICAL", atom(shape.root));
  head.emplace_back("SCHEME", atom(scheme));
  head.emplace_back("VFORM", atom("mutassarf"));
  head.emplace_back("TENSE", atom(tense));
  head.emplace_back("LEMMA", atom(shape.canonical));

  std::vector<FeatureValue> sarg;
  sarg.push_back(argument_avm(
      "NP", nucleus ? "X" : "",
      {{"GENR", atom("masculine")}, {"CASE", atom("marfu3")}}));
  sarg.push_back(argument_avm("NP", nucleus ? "Y" : "",
                              {{"CASE", atom("mansub")}}));

  std::vector<std::pair<std::string, FeatureValue>> cat;
  cat.emplace_back("HEAD", FeatureValue::make_avm(avm(std::move(head))));
  cat.emplace_back("VOICE", atom("active"));
  cat.emplace_back(
      "VALENCE",
      FeatureValue::make_avm(
          avm({{"S-ARG", FeatureValue::make_list(std::move(sarg))}})));

  std::vector<std::pair<std::string, FeatureValue>> cont;
  if (nucleus) {
    cont.emplace_back("NUCLEUS",
                      FeatureValue::make_avm(avm({
                          {"agent-noun", atom("X")},
                          {"patient-noun", atom("Y")},
                      })));
  } else {
    cont.emplace_back("NUCLEUS", FeatureValue::make_avm(avm({})));
  }

  return avm(
      {{"PHON", FeatureValue::text(phon)},
       {"SYNSEM",
        FeatureValue::make_avm(avm(
            {{"LOC",
              FeatureValue::make_avm(avm(
                  {{"CAT", FeatureValue::make_avm(avm(std::move(cat)))},
                   {"CONT",
                    FeatureValue::make_avm(avm(std::move(cont)))}}))}}))}});
}

FeatureStructure noun_entry(Rng& rng, std::size_t index,
                            std::set<std::string>& used,
                            std::string* canonical_out,
                            bool* inflecting_out) {
  static const std::vector<std::string> natures = {
      "ism fail", "ism maful", "sifa muchabbaha", "masdar mimi",
      "ism al-that"};
  static const std::vector<std::string> nforms = {
      "mutassarf muchtak", "mutassarf jamed", "ghair mutassarf"};

  std::string root;
  std::string surface;
  do {
    root.clear();
    surface.clear();
    for (std::size_t i = 0; i < 3; ++i) {
      const std::string& letter = consonants()[pick(rng, consonants().size())];
      if (i > 0) root += " ";
      root += letter;
      surface += letter + (i == 1 ? kKasra : kFatha);
    }
  } while (!used.insert(surface).second);
  const std::string& nform = nforms[pick(rng, nforms.size())];
  *canonical_out = surface;
  *inflecting_out = nform != "ghair mutassarf";

  std::vector<std::pair<std::string, FeatureValue>> head;
  head.emplace_back("MAJ", atom("nom"));
  head.emplace_back("NATURE", atom(natures[index % natures.size()]));
  head.emplace_back("RADICAL", atom(root));
  head.emplace_back("NFORM", atom(nform));
  head.emplace_back("DEFN", atom("nakira"));
  head.emplace_back("DIMINUTIVE", atom("ghair musaghghar"));
  head.emplace_back("RELATIVE", atom("ghair mansub"));
  head.emplace_back("GENR", atom(pick(rng, 2) == 0 ? "masculine"
                                                   : "feminine"));
  head.emplace_back("NUMBER", atom("mufrad"));
  head.emplace_back("LEMMA", atom(surface));

  std::vector<FeatureValue> spr = {atom("V"), atom("DEM")};

  return avm(
      {{"PHON", FeatureValue::text(surface)},
       {"SYNSEM",
        FeatureValue::make_avm(avm({{
            "LOC",
            FeatureValue::make_avm(avm(
                {{"CAT",
                  FeatureValue::make_avm(avm(
                      {{"HEAD", FeatureValue::make_avm(avm(std::move(head)))},
                       {"SPR", FeatureValue::make_list(std::move(spr))}}))}})),
        }}))}});
}

FeatureStructure definite_noun_form(const FeatureStructure& canonical,
                                    const std::string& surface) {
  FeatureStructure inflected = canonical;
  std::string definite = "ال" + surface;
  inflected.set("PHON", FeatureValue::text(definite));
  // Rewrite the form-level features inside HEAD.
  auto* synsem = &inflected.features[1].second.avm.front();
  auto* loc = &synsem->features[0].second.avm.front();
  auto* cat = &loc->features[0].second.avm.front();
  auto* head = &cat->features[0].second.avm.front();
  head->set("DEFN", atom("maarifa"));
  return inflected;
}

FeatureStructure preposition_entry(Rng& rng, std::set<std::string>& used) {
  static const std::vector<std::string> phons = {"في", "على", "من", "إلى",
                                                 "عن", "ب"};
  const std::string phon = unique_phon(phons[pick(rng, phons.size())], used);

  std::vector<FeatureValue> comps;
  comps.push_back(argument_avm(
      "NP", "", {{"CASE", atom("majrur")}, {"NUMBER", atom("mufrad")}}));

  return avm(
      {{"PHON", FeatureValue::text(phon)},
       {"SYNSEM",
        FeatureValue::make_avm(avm(
            {{"LOC",
              FeatureValue::make_avm(avm(
                  {{"CAT",
                    FeatureValue::make_avm(avm(
                        {{"HEAD",
                          FeatureValue::make_avm(avm(
                              {{"MAJ", atom("particule")},
                               {"NATURE", atom("huruf maani")},
                               {"PFORM", atom(phon)}}))},
                         {"VALENCE",
                          FeatureValue::make_avm(avm(
                              {{"COMPS",
                                FeatureValue::make_list(
                                    std::move(comps))}}))}}))}}))}}))}});
}

FeatureStructure tool_particle_entry(Rng& rng, std::set<std::string>& used) {
  static const std::vector<std::string> phons = {"لن", "لم", "أن", "كي",
                                                 "لا"};
  const std::string phon = unique_phon(phons[pick(rng, phons.size())], used);

  return avm(
      {{"PHON", FeatureValue::text(phon)},
       {"SYNSEM",
        FeatureValue::make_avm(avm(
            {{"LOC",
              FeatureValue::make_avm(avm(
                  {{"CAT",
                    FeatureValue::make_avm(avm(
                        {{"HEAD",
                          FeatureValue::make_avm(avm(
                              {{"MAJ", atom("particule")},
                               {"NATURE", atom("huruf maani")}}))},
                         {"SPEC",
                          argument_avm("V", "",
                                       {{"x-mood", atom("mansub")}})}}))},
                   {"CONT",
                    FeatureValue::make_avm(avm(
                        {{"RESTIND", atom("mudhara3")}}))}}))}}))}});
}

}  // namespace

std::string generate_synthetic_lexicon(unsigned long long seed,
                                       const SyntheticCounts& counts) {
  Rng rng(seed);
  std::vector<FeatureStructure> entries;
  std::set<std::string> used;

  static const std::vector<std::string> suffixes = {"نَا", "تُ", "وا"};
  static const std::vector<std::string> inflected_schemes = {
      "yaf3ulu", "yaf3ilu", "yaf3alu"};

  for (std::size_t i = 0; i < counts.verbs; ++i) {
    VerbShape shape = make_verb_shape(rng);
    while (!used.insert(shape.canonical).second) {
      shape = make_verb_shape(rng);
    }
    bool nucleus = pick(rng, 2) == 0;
    entries.push_back(verb_entry(shape, shape.canonical, shape.scheme,
                                 "madhi", nucleus));
    std::size_t members = pick(rng, 3);
    for (std::size_t m = 0; m < members; ++m) {
      std::string surface = shape.canonical + suffixes[m % suffixes.size()];
      if (!used.insert(surface).second) continue;
      entries.push_back(verb_entry(
          shape, surface,
          inflected_schemes[pick(rng, inflected_schemes.size())], "mudhari",
          nucleus));
    }
  }

  for (std::size_t i = 0; i < counts.nouns; ++i) {
    std::string surface;
    bool inflecting = false;
    FeatureStructure canonical =
        noun_entry(rng, i, used, &surface, &inflecting);
    bool add_definite = inflecting && pick(rng, 2) == 0;
    entries.push_back(canonical);
    if (add_definite && used.insert("ال" + surface).second) {
      entries.push_back(definite_noun_form(canonical, surface));
    }
  }

  for (std::size_t i = 0; i < counts.particles; ++i) {
    entries.push_back(pick(rng, 2) == 0 ? preposition_entry(rng, used)
                                        : tool_particle_entry(rng, used));
  }

  return serialize_lexicon(entries);
}

}  // namespace hpsg2lmf
