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
// Reader and writer for feature-structure XML: a root lexicon element with
// one <fs> child per entry, features as <f name="...">, values as
// <symbol value="..."/>, <string>...</string>, <vColl> lists or nested <fs>.

#ifndef HPSG2LMF_FS_XML_HPP
#define HPSG2LMF_FS_XML_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hpsg2lmf/diagnostics.hpp"
#include "hpsg2lmf/feature_structure.hpp"

namespace hpsg2lmf {

struct LexiconParseResult {
  std::vector<HpsgEntry> entries;
  DiagnosticList diagnostics;
  std::size_t total_fs_elements = 0;  // entries.size() + rejected entries
};

/// Parses a whole lexicon document.  Entries with structural defects
/// (missing PHON or MAJ, duplicate feature names, re-entrancy markers)
/// become diagnostics; the rest of the file still loads.  Malformed XML
/// throws ParseError.  Both namespaced (TEI) and plain documents are
/// accepted; the head feature TETE is normalised to HEAD.
LexiconParseResult parse_lexicon(std::string_view xml,
                                 std::string source_file = "");

/// Serialises one feature structure as a standalone <fs> element.
/// parse of the output yields a structurally equal tree, feature order
/// preserved.
std::string serialize_fs(const FeatureStructure& fs);

/// Parses a single standalone <fs> document (inverse of serialize_fs).
FeatureStructure parse_fs(std::string_view xml);

/// Wraps pre-serialised entries in a lexicon root element.
std::string serialize_lexicon(const std::vector<FeatureStructure>& entries);

/// Minimal XML escaping for text and attribute content.
std::string xml_escape(std::string_view raw);

}  // namespace hpsg2lmf

#endif  // HPSG2LMF_FS_XML_HPP
