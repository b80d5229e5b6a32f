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

#include "hpsg2lmf/schema.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hpsg2lmf {

namespace {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

constexpr auto kMorph = FeatureLayer::Morphological;
constexpr auto kSyn = FeatureLayer::Syntactic;
constexpr auto kSem = FeatureLayer::Semantic;
constexpr auto kEntry = FeatureScope::EntryLevel;
constexpr auto kForm = FeatureScope::FormLevel;

using Cats = std::set<LexicalCategory>;
const Cats kAll = {};
const Cats kNoun = {LexicalCategory::Noun};
const Cats kVerb = {LexicalCategory::Verb};
const Cats kParticle = {LexicalCategory::Particle};
const Cats kNounVerb = {LexicalCategory::Noun, LexicalCategory::Verb};
const Cats kNounParticle = {LexicalCategory::Noun, LexicalCategory::Particle};

FeatureDescriptor make(std::string name, FeatureLayer layer,
                       FeatureScope scope, Cats cats, std::string lmf,
                       std::vector<std::string> domain = {},
                       std::vector<std::string> canonical = {},
                       std::vector<std::string> non_inflecting = {}) {
  FeatureDescriptor d;
  d.name = std::move(name);
  d.layer = layer;
  d.scope = scope;
  d.categories = std::move(cats);
  d.lmf_attribute = std::move(lmf);
  d.value_domain = std::move(domain);
  d.canonical_values = std::move(canonical);
  d.non_inflecting_values = std::move(non_inflecting);
  return d;
}

FeatureDescriptor structural(std::string name) {
  FeatureDescriptor d;
  d.name = std::move(name);
  d.structural = true;
  return d;
}

}  // namespace

const char* category_name(LexicalCategory c) {
  switch (c) {
    case LexicalCategory::Noun: return "noun";
    case LexicalCategory::Verb: return "verb";
    case LexicalCategory::Particle: return "particle";
  }
  return "unknown";
}

bool FeatureDescriptor::in_domain(std::string_view value) const {
  if (value_domain.empty()) return true;
  return std::find(value_domain.begin(), value_domain.end(), value) !=
         value_domain.end();
}

bool FeatureDescriptor::is_canonical_value(std::string_view value) const {
  return std::find(canonical_values.begin(), canonical_values.end(), value) !=
         canonical_values.end();
}

FeatureRegistry FeatureRegistry::builtin() {
  FeatureRegistry r;

  // Structural containers: descended through, never projected themselves.
  for (const char* name :
       {"SYNSEM", "LOC", "CAT", "HEAD", "VALENCE", "CONT", "INDEX", "AGR"}) {
    r.register_feature(structural(name));
  }

  // Morphological features.
  r.register_feature(make("PHON", kMorph, kEntry, kAll, "writtenForm"));
  r.register_feature(make("MAJ", kMorph, kEntry, kAll, "partOfSpeech"));
  r.register_feature(make("CFORM", kMorph, kEntry, kVerb, "x-arabic:cform",
                          {"thulathi", "rubai"}));
  r.register_feature(make("DENUDE", kMorph, kEntry, kVerb, "x-arabic:denude",
                          {"mujarrid", "mazid"}));
  r.register_feature(make("DIMINUTIVE", kMorph, kForm, kNoun,
                          "x-arabic:diminutive",
                          {"ghair musaghghar", "sighat al-ttasghir"},
                          {"ghair musaghghar"}));
  r.register_feature(make("RELATIVE", kMorph, kForm, kNoun,
                          "x-arabic:relative", {"mansub", "ghair mansub"},
                          {"ghair mansub"}));
  r.register_feature(
      make("NATURE", kMorph, kEntry, kNounParticle, "x-arabic:nature"));
  r.register_feature(make("RADICAL", kMorph, kEntry, kNounVerb, "root"));
  r.register_feature(make(
      "NFORM", kMorph, kEntry, kNoun, "x-arabic:nform",
      {"mutassarf muchtak", "mutassarf jamed", "ghair mutassarf"}, {},
      {"ghair mutassarf"}));
  r.register_feature(make("VFORM", kMorph, kForm, kVerb, "x-arabic:vform", {},
                          {}, {"jamed", "ghair mutassarf"}));
  r.register_feature(make("SCHEME", kMorph, kForm, kVerb, "scheme"));
  r.register_feature(make("DEFN", kMorph, kForm, kNoun, "definiteness",
                          {"definite", "indefinite", "maarifa", "nakira"},
                          {"indefinite", "nakira"}));
  r.register_feature(make("ORIGIN", kMorph, kEntry, kNoun, "x-arabic:origin"));
  r.register_feature(make("PFORM", kMorph, kEntry, kParticle,
                          "x-arabic:pform"));
  // The binding feature tying an inflected entry to its canonical form.
  r.register_feature(make("LEMMA", kMorph, kEntry, kNounVerb,
                          "x-arabic:lemma"));

  // Agreement features: semantic in HPSG but placed on the morphological
  // side, per their LMF location, which is what projection needs.
  r.register_feature(make("GENR", kMorph, kForm, kAll, "gender"));
  r.register_feature(make("GENDER", kMorph, kForm, kAll, "gender"));
  r.register_feature(
      make("NUMBER", kMorph, kForm, kAll, "grammaticalNumber"));
  r.register_feature(make("CASE", kMorph, kForm, kAll, "grammaticalCase"));
  r.register_feature(make("PERSON", kMorph, kForm, kAll, "person"));
  r.register_feature(
      make("TENSE", kMorph, kForm, kVerb, "grammaticalTense"));

  // Syntactic features.
  r.register_feature(make("SPR", kSyn, kEntry, kNounVerb, "specifier"));
  r.register_feature(make("SPEC", kSyn, kEntry, kParticle, "spec"));
  r.register_feature(make("COMPS", kSyn, kEntry, kAll, "object"));
  r.register_feature(make("SUJ", kSyn, kEntry, kVerb, "subject"));
  r.register_feature(make("SUBJ", kSyn, kEntry, kVerb, "subject"));
  r.register_feature(make("S-ARG", kSyn, kEntry, kVerb, "argument"));
  r.register_feature(make("TOPIC", kSyn, kEntry, kAll, "topic"));
  r.register_feature(make("ATTRIBUT", kSyn, kEntry, kAll, "attribute"));
  r.register_feature(make("VOICE", kSyn, kForm, kVerb, "voice"));
  r.register_feature(
      make("RESTIND", kSyn, kEntry, kParticle, "x-arabic:restind"));
  r.register_feature(make("MOD", kSyn, kEntry, kNoun, ""));
  // SLASH has no projection rule; values flow through the passthrough.
  r.register_feature(make("SLASH", kSyn, kEntry, kAll, ""));

  // Semantic features.
  r.register_feature(make("NUCLEUS", kSem, kEntry, kVerb, "predicate"));

  return r;
}

const FeatureDescriptor* FeatureRegistry::lookup(std::string_view name) const {
  // TETE is normalised to HEAD at parse time; accept it here as well.
  if (name == "TETE") name = "HEAD";
  auto it = table_.find(name);
  return it == table_.end() ? nullptr : &it->second;
}

void FeatureRegistry::register_feature(FeatureDescriptor descriptor) {
  auto name = descriptor.name;
  table_.insert_or_assign(std::move(name), std::move(descriptor));
}

std::vector<const FeatureDescriptor*> FeatureRegistry::all() const {
  std::vector<const FeatureDescriptor*> out;
  out.reserve(table_.size());
  for (const auto& [name, d] : table_) out.push_back(&d);
  return out;
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(sep, start);
    if (end == std::string_view::npos) {
      out.emplace_back(text.substr(start));
      break;
    }
    out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

}  // namespace

// Override file: tab-separated, one feature per line.
//   name  layer  scope  categories  lmf_attribute  value_domain
// layer: morphological|syntactic|semantic|structural
// scope: entry|form; categories: all or comma list; lmf_attribute: - for
// none; value_domain: - or |-separated list.  '#' starts a comment.
void FeatureRegistry::apply_overrides(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() < 3) {
      throw std::runtime_error("registry override line " +
                               std::to_string(line_no) +
                               ": expected at least 3 tab-separated fields");
    }
    FeatureDescriptor d;
    d.name = fields[0];
    const auto& layer = fields[1];
    if (layer == "structural") {
      d.structural = true;
    } else if (layer == "morphological") {
      d.layer = FeatureLayer::Morphological;
    } else if (layer == "syntactic") {
      d.layer = FeatureLayer::Syntactic;
    } else if (layer == "semantic") {
      d.layer = FeatureLayer::Semantic;
    } else {
      throw std::runtime_error("registry override line " +
                               std::to_string(line_no) + ": bad layer '" +
                               layer + "'");
    }
    if (fields[2] == "entry") {
      d.scope = FeatureScope::EntryLevel;
    } else if (fields[2] == "form") {
      d.scope = FeatureScope::FormLevel;
    } else if (!d.structural) {
      throw std::runtime_error("registry override line " +
                               std::to_string(line_no) + ": bad scope '" +
                               fields[2] + "'");
    }
    if (fields.size() > 3 && fields[3] != "all" && !fields[3].empty()) {
      for (const auto& cat : split(fields[3], ',')) {
        if (cat == "noun") d.categories.insert(LexicalCategory::Noun);
        else if (cat == "verb") d.categories.insert(LexicalCategory::Verb);
        else if (cat == "particle")
          d.categories.insert(LexicalCategory::Particle);
        else
          throw std::runtime_error("registry override line " +
                                   std::to_string(line_no) +
                                   ": bad category '" + cat + "'");
      }
    }
    if (fields.size() > 4 && fields[4] != "-") d.lmf_attribute = fields[4];
    if (fields.size() > 5 && fields[5] != "-" && !fields[5].empty()) {
      d.value_domain = split(fields[5], '|');
    }
    register_feature(std::move(d));
  }
}

std::optional<LexicalCategory> classify(const HpsgEntry& entry,
                                        DiagnosticList& diagnostics) {
  const FeatureValue* maj = find_first(entry.body, "MAJ");
  if (maj == nullptr || (!maj->is_atom() && !maj->is_text())) {
    diagnostics.push_back({DiagKind::MissingFeature,
                           "entry has no atomic MAJ value", entry.ordinal, ""});
    return std::nullopt;
  }
  const std::string raw = maj->scalar;
  const std::string value = ascii_lower(raw);
  static const std::set<std::string, std::less<>> verb_values = {
      "verbe", "verb", "fiil", "v", "فعل"};
  static const std::set<std::string, std::less<>> noun_values = {
      "nom", "noun", "ism", "n", "substantif", "اسم"};
  static const std::set<std::string, std::less<>> particle_values = {
      "particule", "particle", "harf", "part", "prep", "preposition",
      "حرف"};
  if (verb_values.count(value)) return LexicalCategory::Verb;
  if (noun_values.count(value)) return LexicalCategory::Noun;
  if (particle_values.count(value)) return LexicalCategory::Particle;
  diagnostics.push_back({DiagKind::UnknownCategory,
                         "unrecognised MAJ value '" + raw + "'", entry.ordinal,
                         ""});
  return std::nullopt;
}

bool admits_inflected_forms(const HpsgEntry& entry, LexicalCategory category,
                            const FeatureRegistry& registry,
                            DiagnosticList& diagnostics) {
  if (category == LexicalCategory::Particle) return false;

  const char* feature =
      category == LexicalCategory::Noun ? "NFORM" : "VFORM";
  const FeatureValue* value = find_first(entry.body, feature);
  if (value == nullptr || (!value->is_atom() && !value->is_text())) {
    diagnostics.push_back({DiagKind::MissingFeature,
                           std::string(category_name(category)) +
                               " entry lacks " + feature +
                               "; treated as standalone",
                           entry.ordinal, ""});
    return false;
  }
  const FeatureDescriptor* descriptor = registry.lookup(feature);
  if (descriptor != nullptr) {
    const auto& blockers = descriptor->non_inflecting_values;
    if (std::find(blockers.begin(), blockers.end(), value->scalar) !=
        blockers.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace hpsg2lmf
