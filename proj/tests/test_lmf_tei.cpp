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

#include <doctest.h>

#include <stdexcept>

#include "hpsg2lmf/lmf_tei.hpp"

namespace hpsg2lmf {
namespace {

LmfLexicalEntry noun_ayn() {
  // The noun ʿayn ("eye"), an entry exercising every block.
  LmfLexicalEntry entry;
  entry.id = "ar:noun:0";
  entry.attributes["partOfSpeech"] = "nom";
  entry.attributes["root"] = "ع ي ن";
  entry.lemma.kind = LmfForm::Kind::Lemma;
  entry.lemma.orthography = "عَيْن";
  entry.lemma.attributes["gender"] = "feminine";
  entry.lemma.attributes["grammaticalNumber"] = "mufrad";

  LmfForm dual;
  dual.orthography = "عَيْنَانِ";
  dual.attributes["grammaticalNumber"] = "muthanna";
  entry.inflected_forms.push_back(dual);

  SubcatFrame frame;
  SyntacticArgument spec;
  spec.function = "specifier";
  spec.constituent = "DET";
  frame.arguments.push_back(spec);
  entry.syntactic_behaviours.push_back(frame);

  SemanticPredicate predicate;
  SemanticArgument arg;
  arg.role = "agent-noun";
  arg.value = "X";
  predicate.arguments.push_back(arg);
  entry.senses.push_back(predicate);
  return entry;
}

LmfLexicalResource resource_of(std::vector<LmfLexicalEntry> entries) {
  LmfLexicalResource resource;
  LmfLexicon lexicon;
  lexicon.entries = std::move(entries);
  resource.lexicons.push_back(std::move(lexicon));
  return resource;
}

TEST_CASE("serialisation is deterministic and carries the TEI namespace") {
  auto resource = resource_of({noun_ayn()});
  std::string first = serialize_tei(resource);
  std::string second = serialize_tei(resource);
  CHECK(first == second);
  CHECK(first.find("http://www.tei-c.org/ns/1.0") != std::string::npos);
  CHECK(first.find("<div type=\"lexicon\" xml:lang=\"ar\">") !=
        std::string::npos);
  CHECK(first.find("<orth>عَيْن</orth>") != std::string::npos);
  CHECK(first.find("<form type=\"lemma\">") != std::string::npos);
  CHECK(first.find("<form type=\"inflected\">") != std::string::npos);
  // Dedicated TEI elements for their data categories.
  CHECK(first.find("<gen>feminine</gen>") != std::string::npos);
  CHECK(first.find("<pos>nom</pos>") != std::string::npos);
  CHECK(first.find("<gram type=\"root\">ع ي ن</gram>") != std::string::npos);
}

TEST_CASE("parse inverts serialise up to structural equality") {
  auto resource = resource_of({noun_ayn()});
  TeiParseResult parsed = parse_tei(serialize_tei(resource));
  CHECK(parsed.diagnostics.empty());
  REQUIRE(parsed.resource.lexicons.size() == 1);
  REQUIRE(parsed.resource.lexicons[0].entries.size() == 1);
  CHECK(parsed.resource.lexicons[0].entries[0] ==
        resource.lexicons[0].entries[0]);
  // A second round trip is byte-identical.
  CHECK(serialize_tei(parsed.resource) == serialize_tei(resource));
}

TEST_CASE("semantic argument links survive the round trip") {
  auto entry = noun_ayn();
  entry.senses[0].arguments[0].link = "sb0:arg0";
  auto resource = resource_of({entry});
  std::string xml = serialize_tei(resource);
  CHECK(xml.find("target=\"#ar:noun:0:sb0:arg0\"") != std::string::npos);
  TeiParseResult parsed = parse_tei(xml);
  CHECK(parsed.resource.lexicons[0].entries[0].senses[0].arguments[0].link ==
        "sb0:arg0");
}

TEST_CASE("compat mode suppresses the extension blocks") {
  TeiOptions options;
  options.compat = true;
  std::string xml = serialize_tei(resource_of({noun_ayn()}), options);
  CHECK(xml.find("syntacticBehaviour") == std::string::npos);
  CHECK(xml.find("semanticPredicate") == std::string::npos);
  CHECK(xml.find("<orth>عَيْن</orth>") != std::string::npos);
}

TEST_CASE("an invalid resource is refused by the serialiser") {
  auto entry = noun_ayn();
  entry.lemma.orthography.clear();
  CHECK_THROWS_AS(serialize_tei(resource_of({entry})), std::invalid_argument);
  CHECK_THROWS_AS(serialize_tei(LmfLexicalResource{}), std::invalid_argument);

  TeiOptions options;
  options.allow_empty = true;
  // Only an empty resource passes under allow_empty.
  CHECK_NOTHROW(serialize_tei(resource_of({}), options));
  entry = noun_ayn();
  entry.lemma.orthography.clear();
  CHECK_THROWS_AS(serialize_tei(resource_of({entry}), options),
                  std::invalid_argument);
}

TEST_CASE("unknown elements are skipped with a diagnostic") {
  std::string xml = serialize_tei(resource_of({noun_ayn()}));
  auto pos = xml.find("<gramGrp>");
  REQUIRE(pos != std::string::npos);
  xml.insert(pos, "<extraElement><nested/></extraElement>");
  TeiParseResult parsed = parse_tei(xml);
  REQUIRE_FALSE(parsed.diagnostics.empty());
  CHECK(parsed.diagnostics[0].kind == DiagKind::UnknownElement);
  CHECK(parsed.resource.lexicons[0].entries[0] == noun_ayn());
}

TEST_CASE("an empty lexicon violates the model on input") {
  std::string xml =
      "<TEI xmlns=\"http://www.tei-c.org/ns/1.0\"><teiHeader/><text><body>"
      "<div type=\"lexicon\" xml:lang=\"ar\"></div>"
      "</body></text></TEI>";
  CHECK_THROWS_AS(parse_tei(xml), std::invalid_argument);
}

TEST_CASE("malformed XML raises ParseError") {
  CHECK_THROWS_AS(parse_tei("<TEI><unclosed"), ParseError);
}

}  // namespace
}  // namespace hpsg2lmf
