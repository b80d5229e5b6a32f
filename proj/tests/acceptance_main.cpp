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
// End-to-end acceptance suite.  Each numbered check prints one PASS/FAIL
// line; the process exits nonzero when any check fails.

#include <sys/resource.h>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "hpsg2lmf/lmf_tei.hpp"
#include "hpsg2lmf/pipeline.hpp"

namespace {

using namespace hpsg2lmf;
using testing::argument;
using testing::atom;
using testing::avm;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Check {
  int number;
  std::string title;
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "\n    failed: " << what;
    }
  }

  bool report() const {
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ": " << title
              << detail.str() << "\n";
    return ok;
  }
};

std::string tei_of(const RunResult& result) {
  TeiOptions options;
  options.allow_empty = true;
  return serialize_tei(result.resource, options);
}

std::vector<std::string> split_entries(const std::string& document) {
  std::regex entry_re("  <fs>[\\s\\S]*?\\n  </fs>");
  std::vector<std::string> out;
  for (std::sregex_iterator it(document.begin(), document.end(), entry_re),
       end;
       it != end; ++it) {
    out.push_back(it->str());
  }
  return out;
}

std::string rebuild(const std::vector<std::string>& entries) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<lexicon>\n";
  for (const auto& entry : entries) {
    out += entry;
    out += "\n";
  }
  return out + "</lexicon>\n";
}

// ---------------------------------------------------------------------------
// 1. Golden merge: the dhahaba / dhahabnā pair folds into one entry with
//    one lemma and one inflected form, independent of input order.

bool check_golden_merge() {
  Check check{1, "golden merge: canonical + inflected fold into one entry"};
  auto start = Clock::now();

  FeatureStructure canonical =
      testing::verb_avm("ذَهَبَ", "ذ هـ ب", "fa3ala", "", "mujarrid");
  FeatureStructure inflected = testing::verb_avm(
      "ذَهَبْنَا", "ذ هـ ب", "fa3alna", "ذَهَبَ", "mujarrid");

  std::string forward = testing::lexicon_of({canonical, inflected});
  std::string reverse = testing::lexicon_of({inflected, canonical});

  RunResult a = run_on_documents({forward});
  RunResult b = run_on_documents({reverse});

  check.expect(a.resource.lexicons.size() == 1, "one lexicon");
  const auto& entries = a.resource.lexicons[0].entries;
  check.expect(entries.size() == 1, "exactly one LMF entry");
  if (entries.size() == 1) {
    check.expect(entries[0].lemma.orthography == "ذَهَبَ",
                 "lemma is the canonical form");
    check.expect(entries[0].inflected_forms.size() == 1,
                 "exactly one inflected form");
    if (!entries[0].inflected_forms.empty()) {
      check.expect(entries[0].inflected_forms[0].orthography == "ذَهَبْنَا",
                   "inflected orthography preserved");
    }
  }
  check.expect(tei_of(a) == tei_of(b),
               "byte-identical output in both input orders");
  check.expect(seconds_since(start) < 1.0, "runtime under 1 s");
  return check.report();
}

// ---------------------------------------------------------------------------
// 2. Golden TEI: the ʿayn entry (pos, lemma form, two inflected forms with
//    singular and plural number values) survives a parse-back round trip.

bool check_golden_tei() {
  Check check{2, "golden TEI: the 'ayn entry round-trips structurally"};
  auto start = Clock::now();

  LmfLexicalEntry ayn;
  ayn.id = "ar:noun:0";
  ayn.attributes["partOfSpeech"] = "nom";
  ayn.attributes["root"] = "ع ي ن";
  ayn.lemma.kind = LmfForm::Kind::Lemma;
  ayn.lemma.orthography = "عَيْن";

  LmfForm singular;
  singular.orthography = "عَيْن";
  singular.attributes["grammaticalNumber"] = "مفرد";
  LmfForm plural;
  plural.orthography = "أَعْيُن";
  plural.attributes["grammaticalNumber"] = "جمع";
  ayn.inflected_forms = {singular, plural};

  LmfLexicalResource resource;
  resource.lexicons.push_back(LmfLexicon{"ar", {ayn}});

  std::string xml = serialize_tei(resource);
  check.expect(xml.find("<pos>nom</pos>") != std::string::npos,
               "pos element present");
  check.expect(xml.find("<form type=\"lemma\">") != std::string::npos,
               "lemma form present");
  check.expect(xml.find("<number>مفرد</number>") != std::string::npos,
               "singular number value");
  check.expect(xml.find("<number>جمع</number>") != std::string::npos,
               "plural number value");

  TeiParseResult parsed = parse_tei(xml);
  check.expect(parsed.diagnostics.empty(), "no parse diagnostics");
  check.expect(parsed.resource.lexicons.size() == 1 &&
                   parsed.resource.lexicons[0].entries.size() == 1,
               "one entry parsed back");
  if (!parsed.resource.lexicons.empty() &&
      !parsed.resource.lexicons[0].entries.empty()) {
    check.expect(parsed.resource.lexicons[0].entries[0] == ayn,
                 "structural equality after parse-back");
  }
  check.expect(seconds_since(start) < 1.0, "runtime under 1 s");
  return check.report();
}

// ---------------------------------------------------------------------------
// 3. Subcat fixture: kataba yields one frame with a typed subject and
//    object and one semantic predicate with two linked arguments.

bool check_subcat() {
  Check check{3, "subcat fixture: kataba frame and predicate"};
  auto start = Clock::now();

  std::vector<FeatureValue> sarg;
  sarg.push_back(argument("NP", "X",
                          {{"GENR", atom("masculine")},
                           {"CASE", atom("nominative")}}));
  sarg.push_back(argument("NP", "Y"));
  FeatureStructure kataba = testing::entry_avm(
      "كَتَبَ",
      {{"MAJ", atom("verbe")},
       {"RADICAL", atom("ك ت ب")},
       {"SCHEME", atom("fa3ala")},
       {"VFORM", atom("mutassarf")},
       {"LEMMA", atom("كَتَبَ")}},
      {{"VALENCE",
        FeatureValue::make_avm(
            avm({{"S-ARG", FeatureValue::make_list(std::move(sarg))}}))}},
      {{"NUCLEUS", FeatureValue::make_avm(avm({
                       {"agent-noun", atom("X")},
                       {"patient-noun", atom("Y")},
                   }))}});

  RunResult result = run_on_documents({testing::lexicon_of({kataba})});
  const auto& entries = result.resource.lexicons[0].entries;
  check.expect(entries.size() == 1, "exactly one entry");
  if (entries.size() == 1) {
    const LmfLexicalEntry& entry = entries[0];
    check.expect(entry.syntactic_behaviours.size() == 1,
                 "exactly one subcat frame");
    if (entry.syntactic_behaviours.size() == 1) {
      const auto& args = entry.syntactic_behaviours[0].arguments;
      check.expect(args.size() == 2, "exactly two syntactic arguments");
      if (args.size() == 2) {
        check.expect(args[0].function == "subject", "first argument subject");
        check.expect(args[0].constituent == "NP", "subject constituent NP");
        check.expect(args[0].attributes.count("gender") &&
                         args[0].attributes.at("gender") == "masculine",
                     "subject gender masculine");
        check.expect(
            args[0].attributes.count("grammaticalCase") &&
                args[0].attributes.at("grammaticalCase") == "nominative",
            "subject case nominative");
        check.expect(args[1].function == "object", "second argument object");
        check.expect(args[1].constituent == "NP", "object constituent NP");
      }
    }
    check.expect(entry.senses.size() == 1, "one semantic predicate");
    if (entry.senses.size() == 1) {
      const auto& sem = entry.senses[0].arguments;
      check.expect(sem.size() == 2, "two semantic arguments");
      if (sem.size() == 2) {
        check.expect(sem[0].role == "agent-noun" &&
                         sem[1].role == "patient-noun",
                     "agent/patient roles");
        check.expect(!sem[0].link.empty() && !sem[1].link.empty(),
                     "semantic arguments linked to syntactic arguments");
      }
    }
  }
  check.expect(seconds_since(start) < 1.0, "runtime under 1 s");
  return check.report();
}

// ---------------------------------------------------------------------------
// 4. Homograph separation: verbs written alike but vocalised differently
//    never merge.

bool check_homographs() {
  Check check{4, "homograph separation: kharaja vs kharija"};
  auto start = Clock::now();

  FeatureStructure kharaja =
      testing::verb_avm("خَرَجَ", "خ ر ج", "fa3ala", "", "mujarrid");
  FeatureStructure kharija =
      testing::verb_avm("خَرِجَ", "خ ر ج", "fa3ila", "", "mujarrid");
  RunResult result =
      run_on_documents({testing::lexicon_of({kharaja, kharija})});
  check.expect(result.resource.lexicons[0].entries.size() == 2,
               "two entries, never one");
  check.expect(seconds_since(start) < 1.0, "runtime under 1 s");
  return check.report();
}

// ---------------------------------------------------------------------------
// 5. Property suite over seeded synthetic lexica.

void collect_scalars(const FeatureValue& value, std::set<std::string>& out) {
  switch (value.kind) {
    case FeatureValue::Kind::Atom:
    case FeatureValue::Kind::Text:
      if (!value.scalar.empty()) out.insert(value.scalar);
      break;
    case FeatureValue::Kind::List:
      for (const auto& item : value.list) collect_scalars(item, out);
      break;
    case FeatureValue::Kind::Avm:
      for (const auto& [name, v] : value.as_avm().features) {
        collect_scalars(v, out);
      }
      break;
  }
}

bool check_properties() {
  Check check{5, "property suite: 200 seeded synthetic lexica"};
  auto start = Clock::now();

  for (unsigned long long seed = 1; seed <= 200 && check.ok; ++seed) {
    SyntheticCounts counts{2 + seed % 8, 1 + seed % 5, seed % 4};
    std::string document = generate_synthetic_lexicon(seed, counts);
    LexiconParseResult parsed = parse_lexicon(document);
    RunResult result = run_on_documents({document});
    std::string xml = tei_of(result);
    const std::string tag = " (seed " + std::to_string(seed) + ")";

    // (a) Entry-count bound.
    check.expect(result.stats.output_entries <= result.stats.input_entries,
                 "|out| <= |in|" + tag);

    // (b) Order independence.
    auto entries = split_entries(document);
    std::mt19937_64 shuffle_rng(seed * 7919);
    std::shuffle(entries.begin(), entries.end(), shuffle_rng);
    RunResult shuffled = run_on_documents({rebuild(entries)});
    check.expect(tei_of(shuffled) == xml, "order independence" + tag);

    // (c) Form conservation: each input surface form appears exactly once
    // among the output orthographies.
    std::map<std::string, int> orths;
    for (const auto& entry : result.resource.lexicons[0].entries) {
      ++orths[entry.lemma.orthography];
      for (const auto& form : entry.inflected_forms) {
        ++orths[form.orthography];
      }
    }
    for (const auto& entry : parsed.entries) {
      if (orths[entry.phon] != 1) {
        check.expect(false, "form '" + entry.phon + "' appears " +
                                std::to_string(orths[entry.phon]) +
                                " times" + tag);
        break;
      }
    }

    // (d) No loss: all generator features are registered, so the loss
    // report stays empty and every input value is recoverable.
    check.expect(result.stats.loss_diagnostics == 0, "empty loss report" + tag);
    std::set<std::string> scalars;
    for (const auto& entry : parsed.entries) {
      for (const auto& [name, value] : entry.body.features) {
        collect_scalars(value, scalars);
      }
    }
    for (const auto& scalar : scalars) {
      if (xml.find(scalar) == std::string::npos) {
        check.expect(false, "value '" + scalar + "' not recoverable" + tag);
        break;
      }
    }

    // (e) Round trips on both serialisations.
    for (const auto& entry : parsed.entries) {
      if (!(parse_fs(serialize_fs(entry.body)) == entry.body)) {
        check.expect(false, "feature-structure round trip" + tag);
        break;
      }
    }
    if (result.stats.output_entries > 0) {
      TeiParseResult reparsed = parse_tei(xml);
      check.expect(reparsed.resource.lexicons[0].entries ==
                       result.resource.lexicons[0].entries,
                   "TEI round trip" + tag);
    }
  }

  double elapsed = seconds_since(start);
  check.expect(elapsed < 60.0, "runtime under 60 s (took " +
                                   std::to_string(elapsed) + " s)");
  return check.report();
}

// ---------------------------------------------------------------------------
// 6. Scale run at corpus magnitudes.

bool check_scale() {
  Check check{6, "scale run: 3000 verb / 450 noun / 50 particle families"};
  auto start = Clock::now();

  std::string document =
      generate_synthetic_lexicon(9001, SyntheticCounts{3000, 450, 50});
  RunConfig config;
  config.jobs = 4;
  RunResult result = run_on_documents({document}, config);

  check.expect(result.exit_code == 0, "clean exit");
  check.expect(result.stats.input_entries >= 3500, "corpus magnitude");
  check.expect(result.stats.conserved(), "stats conservation");
  check.expect(validate(result.resource).empty(), "valid output resource");

  double elapsed = seconds_since(start);
  check.expect(elapsed < 30.0, "runtime under 30 s (took " +
                                   std::to_string(elapsed) + " s)");
  struct rusage usage {};
  getrusage(RUSAGE_SELF, &usage);
  // ru_maxrss is in kilobytes on Linux.
  check.expect(usage.ru_maxrss < 1024L * 1024L,
               "peak memory under 1 GB (used " +
                   std::to_string(usage.ru_maxrss / 1024) + " MB)");
  return check.report();
}

// ---------------------------------------------------------------------------
// 7. Strict-mode contract.

bool check_strict_mode() {
  Check check{7, "strict mode: loss fails the run, value still preserved"};

  std::string document = testing::lexicon_of({testing::entry_avm(
      "كَتَبَ", {{"MAJ", atom("verbe")},
                 {"VFORM", atom("mutassarf")},
                 {"QUIRK", atom("special")}})});

  RunResult lax = run_on_documents({document});
  check.expect(lax.exit_code == 0, "exit 0 without --strict");

  RunConfig config;
  config.strict = true;
  RunResult strict = run_on_documents({document}, config);
  check.expect(strict.exit_code != 0, "nonzero exit under --strict");

  for (const RunResult* result : {&lax, &strict}) {
    std::string xml = tei_of(*result);
    check.expect(xml.find("x-hpsg:QUIRK") != std::string::npos &&
                     xml.find("special") != std::string::npos,
                 "passthrough attribute present in the output");
  }
  return check.report();
}

}  // namespace

int main() {
  bool ok = true;
  ok &= check_golden_merge();
  ok &= check_golden_tei();
  ok &= check_subcat();
  ok &= check_homographs();
  ok &= check_properties();
  ok &= check_scale();
  ok &= check_strict_mode();
  std::cout << (ok ? "ALL CHECKS PASSED" : "SOME CHECKS FAILED") << "\n";
  return ok ? 0 : 1;
}
