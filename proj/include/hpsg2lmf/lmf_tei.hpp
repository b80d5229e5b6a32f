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
// TEI serialisation of an LMF lexical resource.  Element inventory:
//   TEI / teiHeader / text / body / div[@type=lexicon]
//   entry / gramGrp / form[@type=lemma|inflected] / orth
//   pos, number, gen, case for their data categories, <gram type="..."> for
//   everything else
//   syntacticBehaviour / syntacticArgument and semanticPredicate /
//   semanticArgument extension blocks (suppressed in compat mode)

#ifndef HPSG2LMF_LMF_TEI_HPP
#define HPSG2LMF_LMF_TEI_HPP

#include <string>
#include <string_view>

#include "hpsg2lmf/lmf.hpp"

namespace hpsg2lmf {

struct TeiOptions {
  bool compat = false;  // strict-TEI consumers: no extension blocks
  // Permit a resource with no entries (a run over an empty lexicon);
  // model validation is skipped for such a resource.
  bool allow_empty = false;
};

/// Deterministic UTF-8 TEI output: same resource, byte-identical bytes.
/// Entry attributes are emitted sorted by name; forms lemma-first in
/// stored order.  Throws std::invalid_argument naming the violating entry
/// when the resource breaks a model invariant.
std::string serialize_tei(const LmfLexicalResource& resource,
                          const TeiOptions& options = {});

struct TeiParseResult {
  LmfLexicalResource resource;
  DiagnosticList diagnostics;
};

/// Inverse of serialize_tei up to structural equality.  Unknown elements
/// are skipped with a diagnostic.  An empty lexicon violates the model
/// ("at least one lexical entry") and throws std::invalid_argument;
/// malformed XML throws ParseError.
TeiParseResult parse_tei(std::string_view xml);

}  // namespace hpsg2lmf

#endif  // HPSG2LMF_LMF_TEI_HPP
