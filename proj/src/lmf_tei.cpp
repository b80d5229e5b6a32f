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

#include "hpsg2lmf/lmf_tei.hpp"

#include <expat.h>

#include <set>
#include <sstream>

#include "hpsg2lmf/fs_xml.hpp"

namespace hpsg2lmf {

namespace {

constexpr std::string_view kTeiNamespace = "http://www.tei-c.org/ns/1.0";

// Data categories with a dedicated TEI element; the rest use
// <gram type="...">.
const char* dedicated_element(std::string_view attribute) {
  if (attribute == "partOfSpeech") return "pos";
  if (attribute == "grammaticalNumber") return "number";
  if (attribute == "gender") return "gen";
  if (attribute == "grammaticalCase") return "case";
  return nullptr;
}

std::string_view attribute_for_element(std::string_view element) {
  if (element == "pos") return "partOfSpeech";
  if (element == "number") return "grammaticalNumber";
  if (element == "gen") return "gender";
  if (element == "case") return "grammaticalCase";
  return {};
}

void write_gram_grp(std::ostringstream& out, const AttributeMap& attributes,
                    const std::string& pad) {
  if (attributes.empty()) return;
  out << pad << "<gramGrp>\n";
  for (const auto& [name, value] : attributes) {
    if (const char* element = dedicated_element(name)) {
      out << pad << "  <" << element << ">" << xml_escape(value) << "</"
          << element << ">\n";
    } else {
      out << pad << "  <gram type=\"" << xml_escape(name) << "\">"
          << xml_escape(value) << "</gram>\n";
    }
  }
  out << pad << "</gramGrp>\n";
}

void write_form(std::ostringstream& out, const LmfForm& form,
                const std::string& pad) {
  out << pad << "<form type=\""
      << (form.kind == LmfForm::Kind::Lemma ? "lemma" : "inflected")
      << "\">\n";
  out << pad << "  <orth>" << xml_escape(form.orthography) << "</orth>\n";
  write_gram_grp(out, form.attributes, pad + "  ");
  out << pad << "</form>\n";
}

void write_entry(std::ostringstream& out, const LmfLexicalEntry& entry,
                 const TeiOptions& options, const std::string& pad) {
  out << pad << "<entry xml:id=\"" << xml_escape(entry.id) << "\">\n";
  write_gram_grp(out, entry.attributes, pad + "  ");
  write_form(out, entry.lemma, pad + "  ");
  for (const auto& form : entry.inflected_forms) {
    write_form(out, form, pad + "  ");
  }
  if (!options.compat) {
    std::size_t frame_index = 0;
    for (const auto& frame : entry.syntactic_behaviours) {
      std::string frame_id =
          entry.id + ":sb" + std::to_string(frame_index++);
      out << pad << "  <syntacticBehaviour xml:id=\"" << xml_escape(frame_id)
          << "\">\n";
      std::size_t arg_index = 0;
      for (const auto& arg : frame.arguments) {
        out << pad << "    <syntacticArgument xml:id=\""
            << xml_escape(frame_id + ":arg" + std::to_string(arg_index++))
            << "\" function=\"" << xml_escape(arg.function)
            << "\" constituent=\"" << xml_escape(arg.constituent) << "\"";
        if (!arg.label.empty()) {
          out << " label=\"" << xml_escape(arg.label) << "\"";
        }
        if (arg.attributes.empty()) {
          out << "/>\n";
        } else {
          out << ">\n";
          for (const auto& [name, value] : arg.attributes) {
            out << pad << "      <gram type=\"" << xml_escape(name) << "\">"
                << xml_escape(value) << "</gram>\n";
          }
          out << pad << "    </syntacticArgument>\n";
        }
      }
      out << pad << "  </syntacticBehaviour>\n";
    }
    std::size_t predicate_index = 0;
    for (const auto& predicate : entry.senses) {
      out << pad << "  <semanticPredicate xml:id=\""
          << xml_escape(entry.id + ":sp" +
                        std::to_string(predicate_index++))
          << "\">\n";
      for (const auto& arg : predicate.arguments) {
        out << pad << "    <semanticArgument role=\"" << xml_escape(arg.role)
            << "\"";
        if (!arg.link.empty()) {
          out << " target=\"#" << xml_escape(entry.id + ":" + arg.link)
              << "\"";
        }
        out << ">" << xml_escape(arg.value) << "</semanticArgument>\n";
      }
      out << pad << "  </semanticPredicate>\n";
    }
  }
  out << pad << "</entry>\n";
}

}  // namespace

std::string serialize_tei(const LmfLexicalResource& resource,
                          const TeiOptions& options) {
  bool empty = true;
  for (const auto& lexicon : resource.lexicons) {
    if (!lexicon.entries.empty()) empty = false;
  }
  if (auto violations = validate(resource);
      !violations.empty() && !(options.allow_empty && empty)) {
    throw std::invalid_argument(
        "resource violates the LMF model: " + violations.front().description +
        (violations.front().entry_id.empty()
             ? ""
             : " (entry " + violations.front().entry_id + ")"));
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<TEI xmlns=\"" << kTeiNamespace << "\">\n";
  out << "  <teiHeader>\n";
  for (const auto& [name, value] : resource.global_info) {
    out << "    <note type=\"" << xml_escape(name) << "\">"
        << xml_escape(value) << "</note>\n";
  }
  out << "  </teiHeader>\n";
  out << "  <text>\n    <body>\n";
  for (const auto& lexicon : resource.lexicons) {
    out << "      <div type=\"lexicon\" xml:lang=\""
        << xml_escape(lexicon.language) << "\">\n";
    for (const auto& entry : lexicon.entries) {
      write_entry(out, entry, options, "        ");
    }
    out << "      </div>\n";
  }
  out << "    </body>\n  </text>\n</TEI>\n";
  return out.str();
}

namespace {

struct TeiSax {
  LmfLexicalResource resource;
  DiagnosticList diagnostics;

  std::vector<std::string> path;  // open element names
  std::size_t skip_depth = 0;     // >0 while skipping an unknown subtree

  LmfLexicon* lexicon = nullptr;
  LmfLexicalEntry entry;
  bool in_entry = false;
  bool entry_has_lemma = false;
  LmfForm form;
  bool in_form = false;
  SubcatFrame frame;
  bool in_frame = false;
  SyntacticArgument argument;
  bool in_argument = false;
  SemanticPredicate predicate;
  bool in_predicate = false;
  SemanticArgument sem_argument;
  bool in_sem_argument = false;

  std::string text;         // character accumulation
  std::string gram_name;    // attribute name for the open gram element
  std::string note_name;
  bool collecting_text = false;
};

std::string_view sax_local_name(const char* qname) {
  std::string_view name(qname);
  if (auto pos = name.rfind(':'); pos != std::string_view::npos) {
    name.remove_prefix(pos + 1);
  }
  return name;
}

const char* sax_attr(const char** atts, std::string_view wanted) {
  for (const char** a = atts; a[0] != nullptr; a += 2) {
    if (sax_local_name(a[0]) == wanted) return a[1];
  }
  return nullptr;
}

bool known_element(std::string_view name) {
  static const std::set<std::string_view> known = {
      "TEI",  "teiHeader", "note", "text", "body", "div", "entry", "gramGrp",
      "form", "orth",      "pos",  "number", "gen", "case", "gram",
      "syntacticBehaviour", "syntacticArgument", "semanticPredicate",
      "semanticArgument"};
  return known.count(name) > 0;
}

AttributeMap* current_attribute_map(TeiSax& s) {
  if (s.in_argument) return &s.argument.attributes;
  if (s.in_form) return &s.form.attributes;
  if (s.in_entry) return &s.entry.attributes;
  return nullptr;
}

void XMLCALL tei_start(void* user, const char* qname, const char** atts) {
  auto& s = *static_cast<TeiSax*>(user);
  if (s.skip_depth > 0) {
    ++s.skip_depth;
    return;
  }
  auto name = sax_local_name(qname);
  if (!known_element(name)) {
    s.diagnostics.push_back({DiagKind::UnknownElement,
                             "skipping unknown element <" + std::string(name) +
                                 ">",
                             std::nullopt, s.entry.id});
    s.skip_depth = 1;
    return;
  }
  s.path.emplace_back(name);

  if (name == "div") {
    const char* type = sax_attr(atts, "type");
    if (type != nullptr && std::string_view(type) == "lexicon") {
      LmfLexicon lexicon;
      if (const char* lang = sax_attr(atts, "lang")) {
        lexicon.language = lang;
      }
      s.resource.lexicons.push_back(std::move(lexicon));
      s.lexicon = &s.resource.lexicons.back();
    }
  } else if (name == "note") {
    const char* type = sax_attr(atts, "type");
    s.note_name = type != nullptr ? type : "";
    s.text.clear();
    s.collecting_text = true;
  } else if (name == "entry") {
    s.entry = LmfLexicalEntry{};
    if (const char* id = sax_attr(atts, "id")) s.entry.id = id;
    s.in_entry = true;
    s.entry_has_lemma = false;
  } else if (name == "form") {
    s.form = LmfForm{};
    const char* type = sax_attr(atts, "type");
    s.form.kind = (type != nullptr && std::string_view(type) == "lemma")
                      ? LmfForm::Kind::Lemma
                      : LmfForm::Kind::Inflected;
    s.in_form = true;
  } else if (name == "orth" || name == "pos" || name == "number" ||
             name == "gen" || name == "case" || name == "semanticArgument" ||
             name == "gram") {
    s.text.clear();
    s.collecting_text = true;
    if (name == "gram") {
      const char* type = sax_attr(atts, "type");
      s.gram_name = type != nullptr ? type : "";
    }
    if (name == "semanticArgument") {
      s.sem_argument = SemanticArgument{};
      if (const char* role = sax_attr(atts, "role")) {
        s.sem_argument.role = role;
      }
      if (const char* target = sax_attr(atts, "target")) {
        std::string_view t(target);
        if (!t.empty() && t.front() == '#') t.remove_prefix(1);
        // Links are stored relative to the entry.
        std::string prefix = s.entry.id + ":";
        if (t.substr(0, prefix.size()) == prefix) {
          t.remove_prefix(prefix.size());
        }
        s.sem_argument.link = std::string(t);
      }
      s.in_sem_argument = true;
    }
  } else if (name == "syntacticBehaviour") {
    s.frame = SubcatFrame{};
    if (const char* id = sax_attr(atts, "id")) s.frame.id = id;
    s.in_frame = true;
  } else if (name == "syntacticArgument") {
    s.argument = SyntacticArgument{};
    if (const char* f = sax_attr(atts, "function")) s.argument.function = f;
    if (const char* c = sax_attr(atts, "constituent")) {
      s.argument.constituent = c;
    }
    if (const char* l = sax_attr(atts, "label")) s.argument.label = l;
    s.in_argument = true;
  } else if (name == "semanticPredicate") {
    s.predicate = SemanticPredicate{};
    if (const char* id = sax_attr(atts, "id")) s.predicate.id = id;
    s.in_predicate = true;
  }
}

void XMLCALL tei_end(void* user, const char* qname) {
  auto& s = *static_cast<TeiSax*>(user);
  if (s.skip_depth > 0) {
    --s.skip_depth;
    return;
  }
  auto name = sax_local_name(qname);
  if (!s.path.empty()) s.path.pop_back();

  if (name == "note") {
    if (!s.note_name.empty()) {
      s.resource.global_info[s.note_name] = s.text;
    }
    s.collecting_text = false;
  } else if (name == "orth") {
    if (s.in_form) s.form.orthography = s.text;
    s.collecting_text = false;
  } else if (name == "pos" || name == "number" || name == "gen" ||
             name == "case" || name == "gram") {
    std::string attribute = name == "gram"
                                ? s.gram_name
                                : std::string(attribute_for_element(name));
    if (AttributeMap* target = current_attribute_map(s);
        target != nullptr && !attribute.empty()) {
      (*target)[attribute] = s.text;
    }
    s.collecting_text = false;
  } else if (name == "form") {
    if (s.form.kind == LmfForm::Kind::Lemma && !s.entry_has_lemma) {
      s.entry.lemma = std::move(s.form);
      s.entry_has_lemma = true;
    } else {
      s.entry.inflected_forms.push_back(std::move(s.form));
    }
    s.in_form = false;
  } else if (name == "syntacticArgument") {
    s.frame.arguments.push_back(std::move(s.argument));
    s.in_argument = false;
  } else if (name == "syntacticBehaviour") {
    s.entry.syntactic_behaviours.push_back(std::move(s.frame));
    s.in_frame = false;
  } else if (name == "semanticArgument") {
    s.sem_argument.value = s.text;
    s.predicate.arguments.push_back(std::move(s.sem_argument));
    s.in_sem_argument = false;
    s.collecting_text = false;
  } else if (name == "semanticPredicate") {
    s.entry.senses.push_back(std::move(s.predicate));
    s.in_predicate = false;
  } else if (name == "entry") {
    if (s.lexicon != nullptr) {
      s.lexicon->entries.push_back(std::move(s.entry));
    }
    s.in_entry = false;
  }
}

void XMLCALL tei_chars(void* user, const XML_Char* data, int len) {
  auto& s = *static_cast<TeiSax*>(user);
  if (s.skip_depth > 0 || !s.collecting_text) return;
  s.text.append(data, static_cast<std::size_t>(len));
}

}  // namespace

TeiParseResult parse_tei(std::string_view xml) {
  struct ParserHandle {
    XML_Parser p;
    explicit ParserHandle(XML_Parser parser) : p(parser) {}
    ~ParserHandle() { XML_ParserFree(p); }
  };

  ParserHandle handle(XML_ParserCreate(nullptr));
  TeiSax state;
  XML_SetUserData(handle.p, &state);
  XML_SetElementHandler(handle.p, tei_start, tei_end);
  XML_SetCharacterDataHandler(handle.p, tei_chars);

  if (XML_Parse(handle.p, xml.data(), static_cast<int>(xml.size()),
                /*isFinal=*/1) == XML_STATUS_ERROR) {
    throw ParseError(XML_ErrorString(XML_GetErrorCode(handle.p)),
                     XML_GetCurrentLineNumber(handle.p),
                     XML_GetCurrentColumnNumber(handle.p));
  }

  for (const auto& lexicon : state.resource.lexicons) {
    if (lexicon.entries.empty()) {
      throw std::invalid_argument("lexicon '" + lexicon.language +
                                  "' must contain at least one lexical entry");
    }
  }
  if (state.resource.lexicons.empty()) {
    throw std::invalid_argument("document contains no lexicon");
  }
  return {std::move(state.resource), std::move(state.diagnostics)};
}

}  // namespace hpsg2lmf
