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

#ifndef HPSG2LMF_DIAGNOSTICS_HPP
#define HPSG2LMF_DIAGNOSTICS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hpsg2lmf {

/// Recoverable problems are collected as diagnostics; only malformed XML
/// or unusable run configurations abort a run.
enum class DiagKind {
  MissingFeature,        // entry lacks PHON or MAJ or a required key feature
  DuplicateFeature,      // two features with the same name at one AVM level
  UnsupportedConstruct,  // re-entrancy markers and other unparsed constructs
  UnknownCategory,       // MAJ value not recognised
  UnknownFeature,        // feature absent from the registry (information loss)
  ValueOutsideDomain,    // value not in the descriptor's enumerated domain
  CategoryMismatch,      // feature applied to a category it is not declared for
  UnknownRole,           // semantic role outside the registered role set
  MergeConflict,         // conflicting attribute values while folding entries
  DuplicateCanonical,    // second canonical form for an existing merge key
  DuplicateForm,         // identical inflected form attached twice
  LemmaPending,          // family never received its canonical form
  MissingBinding,        // inflected form without a lemma-binding feature
  UnknownElement,        // unrecognised element while reading LMF/TEI input
  InvariantViolation,    // LMF resource invariant broken
};

const char* diag_kind_name(DiagKind kind);

struct Diagnostic {
  DiagKind kind;
  std::string message;
  std::optional<std::size_t> entry_index;  // ordinal in the source lexicon
  std::string entry_id;                    // LMF entry id, when known

  std::string to_string() const;
};

using DiagnosticList = std::vector<Diagnostic>;

/// Fatal XML error with position information.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hpsg2lmf

#endif  // HPSG2LMF_DIAGNOSTICS_HPP
