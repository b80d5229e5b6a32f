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
// End-to-end driver: open HPSG lexica, project entry by entry, merge,
// emit the LMF/TEI output plus loss/merge reports and stats.

#ifndef HPSG2LMF_PIPELINE_HPP
#define HPSG2LMF_PIPELINE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpsg2lmf/lmf.hpp"
#include "hpsg2lmf/merger.hpp"
#include "hpsg2lmf/projection.hpp"

namespace hpsg2lmf {

struct RunConfig {
  std::vector<std::string> inputs;
  std::string output;
  std::optional<std::string> registry_override;   // feature table overrides
  std::optional<std::string> attribute_overrides; // feature -> LMF attribute
  std::optional<std::string> value_map;           // value spelling translation
  bool strict = false;   // loss/conflict diagnostics become failures
  bool compat = false;   // suppress TEI extension blocks
  unsigned jobs = 1;     // parallel projection workers
  std::optional<std::string> loss_report;
  std::optional<std::string> merge_report;
  std::optional<std::string> stats_report;
};

struct CategoryCounts {
  std::size_t input = 0;
  std::size_t output = 0;
};

struct RunStats {
  std::map<std::string, CategoryCounts> per_category;  // keyed by category name
  std::size_t input_entries = 0;
  std::size_t output_entries = 0;
  std::size_t new_entries = 0;
  std::size_t attached_forms = 0;
  std::size_t promoted_lemmas = 0;
  std::size_t folded_duplicates = 0;
  std::size_t rejected_entries = 0;
  std::map<std::string, std::size_t> diagnostics_by_kind;
  std::size_t loss_diagnostics = 0;
  std::size_t conflict_diagnostics = 0;
  double wall_seconds = 0.0;

  /// input == new + attached + promoted + folded + rejected.
  bool conserved() const;

  std::string summary() const;
};

struct RunResult {
  RunStats stats;
  LmfLexicalResource resource;
  DiagnosticList diagnostics;
  int exit_code = 0;  // 0 ok, 1 strict-mode diagnostics, 2 fatal
};

/// Runs the whole pipeline.  Unreadable inputs and invalid output
/// resources are fatal (exit_code 2); under strict mode any loss or
/// conflict diagnostic yields exit_code 1.  Output is identical for any
/// jobs count.
RunResult run(const RunConfig& config);

/// Convenience wrapper converting in-memory lexicon documents; used by the
/// tests.  No files are touched unless config paths are set.
RunResult run_on_documents(const std::vector<std::string>& documents,
                           const RunConfig& config = {});

struct SyntheticCounts {
  std::size_t verbs = 0;      // verb families (canonical + inflected members)
  std::size_t nouns = 0;      // noun families
  std::size_t particles = 0;  // standalone particle entries
};

/// Deterministic seeded synthetic HPSG lexicon covering verbs with
/// inflected-form families, nouns across NATURE subcategories and both
/// particle AVM models.  Same seed and counts, byte-identical output.
std::string generate_synthetic_lexicon(unsigned long long seed,
                                       const SyntheticCounts& counts);

}  // namespace hpsg2lmf

#endif  // HPSG2LMF_PIPELINE_HPP
