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

#include "hpsg2lmf/fs_xml.hpp"

#include <expat.h>

#include <cassert>
#include <memory>
#include <set>
#include <sstream>
#include <variant>

namespace hpsg2lmf {

namespace {

// Local name with any namespace prefix stripped; lets the reader accept
// both namespaced (tei:fs) and plain documents.
std::string_view local_name(const char* qname) {
  std::string_view name(qname);
  if (auto pos = name.rfind(':'); pos != std::string_view::npos) {
    name.remove_prefix(pos + 1);
  }
  return name;
}

const char* attr_value(const char** atts, std::string_view wanted) {
  for (const char** a = atts; a[0] != nullptr; a += 2) {
    if (local_name(a[0]) == wanted) return a[1];
  }
  return nullptr;
}

bool has_sharing_marker(const char** atts) {
  for (const char** a = atts; a[0] != nullptr; a += 2) {
    auto name = local_name(a[0]);
    if (name == "sameAs" || name == "feats" || name == "fVal") return true;
  }
  return false;
}

struct FsFrame {
  FeatureStructure fs;
  std::set<std::string> seen_names;
};
struct FFrame {
  std::string name;
  std::vector<FeatureValue> values;
};
struct CollFrame {
  std::vector<FeatureValue> items;
};
struct StringFrame {
  std::string text;
};
struct IgnoredFrame {};  // unknown element subtree being skipped

using Frame =
    std::variant<FsFrame, FFrame, CollFrame, StringFrame, IgnoredFrame>;

struct SaxState {
  XML_Parser parser = nullptr;
  std::string source_file;
  bool single_fs_mode = false;  // root element is itself an <fs>

  bool saw_root = false;
  std::vector<Frame> stack;

  // Per-entry error; the entry is dropped but parsing continues.
  bool entry_bad = false;
  Diagnostic entry_diag{};

  std::vector<std::pair<std::size_t, FeatureStructure>> structures;
  DiagnosticList diagnostics;
  std::size_t total_fs = 0;
};

void fail_entry(SaxState& s, DiagKind kind, std::string message) {
  if (s.entry_bad) return;  // keep the first problem only
  s.entry_bad = true;
  std::size_t ordinal = s.total_fs == 0 ? 0 : s.total_fs - 1;
  s.entry_diag = Diagnostic{kind, std::move(message), ordinal, ""};
}

// Appends a completed value to the innermost accumulator (<f> or <vColl>).
void push_value(SaxState& s, FeatureValue value) {
  if (s.stack.empty()) return;
  if (auto* f = std::get_if<FFrame>(&s.stack.back())) {
    f->values.push_back(std::move(value));
  } else if (auto* coll = std::get_if<CollFrame>(&s.stack.back())) {
    coll->items.push_back(std::move(value));
  } else {
    fail_entry(s, DiagKind::UnsupportedConstruct,
               "value element outside <f> or <vColl>");
  }
}

void XMLCALL on_start(void* user, const char* qname, const char** atts) {
  auto& s = *static_cast<SaxState*>(user);
  auto name = local_name(qname);

  if (!s.saw_root) {
    s.saw_root = true;
    if (name == "fs") {
      s.single_fs_mode = true;
      // falls through: the root fs is parsed like an entry fs
    } else {
      return;  // lexicon root container, any element name accepted
    }
  }

  if (!s.stack.empty() && std::holds_alternative<IgnoredFrame>(s.stack.back())) {
    s.stack.emplace_back(IgnoredFrame{});
    return;
  }

  bool at_entry_level = s.stack.empty();
  if (at_entry_level && name != "fs") {
    // Stray non-fs child of the lexicon root (e.g. metadata): skip it.
    s.stack.emplace_back(IgnoredFrame{});
    return;
  }

  if (has_sharing_marker(atts)) {
    fail_entry(s, DiagKind::UnsupportedConstruct,
               "re-entrancy markers are not supported");
  }

  if (name == "fs") {
    if (at_entry_level) {
      ++s.total_fs;
      s.entry_bad = false;
    }
    FsFrame frame;
    if (const char* type = attr_value(atts, "type")) {
      frame.fs.type_label = type;
    }
    s.stack.emplace_back(std::move(frame));
  } else if (name == "f") {
    const char* fname = attr_value(atts, "name");
    if (fname == nullptr || *fname == '\0') {
      fail_entry(s, DiagKind::UnsupportedConstruct, "<f> without a name");
      s.stack.emplace_back(FFrame{"", {}});
      return;
    }
    if (auto* fs = std::get_if<FsFrame>(&s.stack.back())) {
      if (!fs->seen_names.insert(fname).second) {
        fail_entry(s, DiagKind::DuplicateFeature,
                   std::string("duplicate feature '") + fname + "'");
      }
    } else {
      fail_entry(s, DiagKind::UnsupportedConstruct, "<f> outside <fs>");
    }
    s.stack.emplace_back(FFrame{fname, {}});
  } else if (name == "symbol" || name == "numeric" || name == "binary") {
    const char* value = attr_value(atts, "value");
    push_value(s, FeatureValue::atom(value != nullptr ? value : ""));
    s.stack.emplace_back(IgnoredFrame{});  // no meaningful content inside
  } else if (name == "string") {
    s.stack.emplace_back(StringFrame{});
  } else if (name == "vColl" || name == "coll" || name == "vList") {
    s.stack.emplace_back(CollFrame{});
  } else {
    fail_entry(s, DiagKind::UnsupportedConstruct,
               "unsupported element <" + std::string(name) + ">");
    s.stack.emplace_back(IgnoredFrame{});
  }
}

void XMLCALL on_end(void* user, const char* qname) {
  auto& s = *static_cast<SaxState*>(user);
  (void)qname;
  if (s.stack.empty()) return;  // lexicon root close

  Frame frame = std::move(s.stack.back());
  s.stack.pop_back();

  if (std::holds_alternative<IgnoredFrame>(frame)) return;

  if (auto* fs = std::get_if<FsFrame>(&frame)) {
    if (s.stack.empty()) {
      // Entry-level fs completed.
      if (!s.entry_bad) {
        s.structures.emplace_back(s.total_fs - 1, std::move(fs->fs));
      } else {
        s.diagnostics.push_back(s.entry_diag);
        s.entry_bad = false;
      }
      return;
    }
    push_value(s, FeatureValue::make_avm(std::move(fs->fs)));
  } else if (auto* f = std::get_if<FFrame>(&frame)) {
    if (f->values.size() != 1) {
      fail_entry(s, DiagKind::UnsupportedConstruct,
                 "feature '" + f->name + "' has " +
                     std::to_string(f->values.size()) +
                     " values (expected exactly one)");
      return;
    }
    if (s.stack.empty()) return;
    if (auto* parent = std::get_if<FsFrame>(&s.stack.back())) {
      parent->fs.features.emplace_back(std::move(f->name),
                                       std::move(f->values.front()));
    }
  } else if (auto* coll = std::get_if<CollFrame>(&frame)) {
    push_value(s, FeatureValue::make_list(std::move(coll->items)));
  } else if (auto* str = std::get_if<StringFrame>(&frame)) {
    push_value(s, FeatureValue::text(std::move(str->text)));
  }
}

void XMLCALL on_chars(void* user, const XML_Char* data, int len) {
  auto& s = *static_cast<SaxState*>(user);
  if (s.stack.empty()) return;
  if (auto* str = std::get_if<StringFrame>(&s.stack.back())) {
    str->text.append(data, static_cast<std::size_t>(len));
  }
}

SaxState parse_document(std::string_view xml, std::string source_file) {
  struct ParserHandle {
    XML_Parser p;
    explicit ParserHandle(XML_Parser parser) : p(parser) {}
    ~ParserHandle() { XML_ParserFree(p); }
  };

  ParserHandle handle(XML_ParserCreate(nullptr));
  SaxState state;
  state.parser = handle.p;
  state.source_file = std::move(source_file);

  XML_SetUserData(handle.p, &state);
  XML_SetElementHandler(handle.p, on_start, on_end);
  XML_SetCharacterDataHandler(handle.p, on_chars);

  if (XML_Parse(handle.p, xml.data(), static_cast<int>(xml.size()),
                /*isFinal=*/1) == XML_STATUS_ERROR) {
    throw ParseError(XML_ErrorString(XML_GetErrorCode(handle.p)),
                     XML_GetCurrentLineNumber(handle.p),
                     XML_GetCurrentColumnNumber(handle.p));
  }
  return state;
}

}  // namespace

LexiconParseResult parse_lexicon(std::string_view xml,
                                 std::string source_file) {
  SaxState state = parse_document(xml, source_file);

  LexiconParseResult result;
  result.diagnostics = std::move(state.diagnostics);
  result.total_fs_elements = state.total_fs;

  for (auto& [document_ordinal, fs] : state.structures) {
    HpsgEntry entry;
    entry.source_file = source_file;

    const FeatureValue* phon = fs.find("PHON");
    if (phon == nullptr) phon = find_first(fs, "PHON");
    if (phon == nullptr || (!phon->is_atom() && !phon->is_text()) ||
        phon->scalar.empty()) {
      result.diagnostics.push_back({DiagKind::MissingFeature,
                                    "entry lacks a non-empty PHON",
                                    document_ordinal, ""});
      continue;
    }
    if (find_first(fs, "MAJ") == nullptr) {
      result.diagnostics.push_back(
          {DiagKind::MissingFeature, "entry lacks MAJ", document_ordinal, ""});
      continue;
    }
    entry.phon = phon->scalar;
    entry.body = std::move(fs);
    result.entries.push_back(std::move(entry));
  }

  // Ordinals are document positions; reindex loaded entries 0..n-1 while
  // diagnostics keep their document position.
  for (std::size_t i = 0; i < result.entries.size(); ++i) {
    result.entries[i].ordinal = i;
  }
  return result;
}

FeatureStructure parse_fs(std::string_view xml) {
  SaxState state = parse_document(xml, "");
  if (!state.diagnostics.empty()) {
    throw std::runtime_error("parse_fs: " +
                             state.diagnostics.front().to_string());
  }
  if (state.structures.size() != 1) {
    throw std::runtime_error("parse_fs: expected exactly one <fs>, found " +
                             std::to_string(state.structures.size()));
  }
  return std::move(state.structures.front().second);
}

std::string xml_escape(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

namespace {

void write_value(std::ostringstream& out, const FeatureValue& value,
                 int indent);

void write_fs(std::ostringstream& out, const FeatureStructure& fs,
              int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  out << pad << "<fs";
  if (fs.type_label) out << " type=\"" << xml_escape(*fs.type_label) << "\"";
  if (fs.features.empty()) {
    out << "/>\n";
    return;
  }
  out << ">\n";
  for (const auto& [name, value] : fs.features) {
    out << pad << "  <f name=\"" << xml_escape(name) << "\">\n";
    write_value(out, value, indent + 2);
    out << pad << "  </f>\n";
  }
  out << pad << "</fs>\n";
}

void write_value(std::ostringstream& out, const FeatureValue& value,
                 int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  switch (value.kind) {
    case FeatureValue::Kind::Atom:
      out << pad << "<symbol value=\"" << xml_escape(value.scalar) << "\"/>\n";
      break;
    case FeatureValue::Kind::Text:
      out << pad << "<string>" << xml_escape(value.scalar) << "</string>\n";
      break;
    case FeatureValue::Kind::List:
      if (value.list.empty()) {
        out << pad << "<vColl org=\"list\"/>\n";
      } else {
        out << pad << "<vColl org=\"list\">\n";
        for (const auto& item : value.list) write_value(out, item, indent + 1);
        out << pad << "</vColl>\n";
      }
      break;
    case FeatureValue::Kind::Avm:
      write_fs(out, value.as_avm(), indent);
      break;
  }
}

}  // namespace

std::string serialize_fs(const FeatureStructure& fs) {
  std::ostringstream out;
  write_fs(out, fs, 0);
  return out.str();
}

std::string serialize_lexicon(const std::vector<FeatureStructure>& entries) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<lexicon>\n";
  for (const auto& fs : entries) {
    std::istringstream body(serialize_fs(fs));
    std::string line;
    while (std::getline(body, line)) out << "  " << line << "\n";
  }
  out << "</lexicon>\n";
  return out.str();
}

}  // namespace hpsg2lmf
