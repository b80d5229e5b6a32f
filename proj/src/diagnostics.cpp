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

#include "hpsg2lmf/diagnostics.hpp"

#include <sstream>

namespace hpsg2lmf {

const char* diag_kind_name(DiagKind kind) {
  switch (kind) {
    case DiagKind::MissingFeature: return "missing-feature";
    case DiagKind::DuplicateFeature: return "duplicate-feature";
    case DiagKind::UnsupportedConstruct: return "unsupported-construct";
    case DiagKind::UnknownCategory: return "unknown-category";
    case DiagKind::UnknownFeature: return "unknown-feature";
    case DiagKind::ValueOutsideDomain: return "value-outside-domain";
    case DiagKind::CategoryMismatch: return "category-mismatch";
    case DiagKind::UnknownRole: return "unknown-role";
    case DiagKind::MergeConflict: return "merge-conflict";
    case DiagKind::DuplicateCanonical: return "duplicate-canonical";
    case DiagKind::DuplicateForm: return "duplicate-form";
    case DiagKind::LemmaPending: return "lemma-pending";
    case DiagKind::MissingBinding: return "missing-binding";
    case DiagKind::UnknownElement: return "unknown-element";
    case DiagKind::InvariantViolation: return "invariant-violation";
  }
  return "unknown";
}

std::string Diagnostic::to_string() const {
  std::ostringstream out;
  out << diag_kind_name(kind);
  if (entry_index) out << "\tentry#" << *entry_index;
  if (!entry_id.empty()) out << "\t" << entry_id;
  out << "\t" << message;
  return out.str();
}

ParseError::ParseError(std::string message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(message + " at line " + std::to_string(line) +
                         ", column " + std::to_string(column)),
      line_(line),
      column_(column) {}

}  // namespace hpsg2lmf
