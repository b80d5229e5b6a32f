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

#include "hpsg2lmf/pipeline.hpp"

#include <chrono>
#include <fstream>
#include <future>
#include <sstream>

#include "hpsg2lmf/fs_xml.hpp"
#include "hpsg2lmf/lmf_tei.hpp"

namespace hpsg2lmf {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  out << content;
}

std::map<std::string, std::string> read_pair_file(const std::string& path) {
  std::map<std::string, std::string> out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error("bad line in " + path +
                               " (expected two tab-separated fields): " +
                               line);
    }
    out[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return out;
}

bool is_loss(const Diagnostic& d) { return d.kind == DiagKind::UnknownFeature; }

bool is_conflict(const Diagnostic& d) {
  return d.kind == DiagKind::MergeConflict;
}

bool is_merge_report_kind(const Diagnostic& d) {
  switch (d.kind) {
    case DiagKind::MergeConflict:
    case DiagKind::DuplicateCanonical:
    case DiagKind::DuplicateForm:
    case DiagKind::LemmaPending:
    case DiagKind::MissingBinding:
      return true;
    default:
      return false;
  }
}

}  // namespace

bool RunStats::conserved() const {
  return input_entries == new_entries + attached_forms + promoted_lemmas +
                              folded_duplicates + rejected_entries;
}

std::string RunStats::summary() const {
  std::ostringstream out;
  out << "input_entries\t" << input_entries << "\n";
  out << "output_entries\t" << output_entries << "\n";
  out << "new_entries\t" << new_entries << "\n";
  out << "attached_forms\t" << attached_forms << "\n";
  out << "promoted_lemmas\t" << promoted_lemmas << "\n";
  out << "folded_duplicates\t" << folded_duplicates << "\n";
  out << "rejected_entries\t" << rejected_entries << "\n";
  for (const auto& [category, counts] : per_category) {
    out << "category\t" << category << "\tin\t" << counts.input << "\tout\t"
        << counts.output << "\n";
  }
  for (const auto& [kind, count] : diagnostics_by_kind) {
    out << "diagnostic\t" << kind << "\t" << count << "\n";
  }
  out << "wall_seconds\t" << wall_seconds << "\n";
  return out.str();
}

RunResult run_on_documents(const std::vector<std::string>& documents,
                           const RunConfig& config) {
  const auto started = std::chrono::steady_clock::now();

  FeatureRegistry registry = FeatureRegistry::builtin();
  if (config.registry_override) {
    registry.apply_overrides(read_file(*config.registry_override));
  }
  ProjectionOptions projection_options;
  if (config.value_map) {
    projection_options.value_map = read_pair_file(*config.value_map);
  }
  if (config.attribute_overrides) {
    projection_options.attribute_overrides =
        read_pair_file(*config.attribute_overrides);
  }
  const std::vector<ProjectionRule> rules = builtin_rules();

  RunResult result;
  RunStats& stats = result.stats;

  struct Classified {
    HpsgEntry entry;
    LexicalCategory category;
    bool admits = false;
  };
  std::vector<Classified> pending;

  for (std::size_t doc_index = 0; doc_index < documents.size(); ++doc_index) {
    LexiconParseResult parsed = parse_lexicon(
        documents[doc_index], "input#" + std::to_string(doc_index));
    stats.input_entries += parsed.total_fs_elements;
    stats.rejected_entries +=
        parsed.total_fs_elements - parsed.entries.size();
    for (auto& diagnostic : parsed.diagnostics) {
      result.diagnostics.push_back(std::move(diagnostic));
    }
    for (auto& entry : parsed.entries) {
      auto category = classify(entry, result.diagnostics);
      if (!category) {
        ++stats.rejected_entries;
        continue;
      }
      bool admits = admits_inflected_forms(entry, *category, registry,
                                           result.diagnostics);
      ++stats.per_category[category_name(*category)].input;
      pending.push_back({std::move(entry), *category, admits});
    }
  }

  // Projection is pure per entry; it may run on a worker pool.  Placement
  // stays single-consumer, applied in input order (the result is order
  // independent anyway).
  std::vector<ProjectionResult> projections(pending.size());
  const unsigned jobs = config.jobs == 0 ? 1 : config.jobs;
  if (jobs <= 1 || pending.size() < 2) {
    for (std::size_t i = 0; i < pending.size(); ++i) {
      projections[i] =
          project_entry(pending[i].entry, pending[i].category,
                        pending[i].admits, registry, rules,
                        projection_options);
    }
  } else {
    std::vector<std::future<void>> workers;
    std::size_t chunk = (pending.size() + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      std::size_t begin = w * chunk;
      std::size_t end = std::min(pending.size(), begin + chunk);
      if (begin >= end) break;
      workers.push_back(std::async(std::launch::async, [&, begin, end] {
        for (std::size_t i = begin; i < end; ++i) {
          projections[i] =
              project_entry(pending[i].entry, pending[i].category,
                            pending[i].admits, registry, rules,
                            projection_options);
        }
      }));
    }
    for (auto& worker : workers) worker.get();
  }

  Merger merger(registry);
  for (std::size_t i = 0; i < pending.size(); ++i) {
    for (const auto& diagnostic : projections[i].diagnostics) {
      result.diagnostics.push_back(diagnostic);
    }
    merger.place(pending[i].entry, pending[i].category, pending[i].admits,
                 projections[i], result.diagnostics);
  }

  const auto& counters = merger.counters();
  stats.new_entries = counters.new_entries;
  stats.attached_forms = counters.attached_forms;
  stats.promoted_lemmas = counters.promoted_lemmas;
  stats.folded_duplicates = counters.folded_duplicates;

  result.resource = merger.finalize(result.diagnostics);

  for (const auto& lexicon : result.resource.lexicons) {
    stats.output_entries += lexicon.entries.size();
    for (const auto& entry : lexicon.entries) {
      if (entry.category) {
        ++stats.per_category[category_name(*entry.category)].output;
      }
    }
  }

  for (const auto& diagnostic : result.diagnostics) {
    ++stats.diagnostics_by_kind[diag_kind_name(diagnostic.kind)];
    if (is_loss(diagnostic)) ++stats.loss_diagnostics;
    if (is_conflict(diagnostic)) ++stats.conflict_diagnostics;
  }

  if (stats.output_entries > 0) {
    if (auto violations = validate(result.resource); !violations.empty()) {
      std::ostringstream message;
      message << "projected resource is invalid:";
      for (const auto& violation : violations) {
        message << "\n  " << violation.entry_id << ": "
                << violation.description;
      }
      throw std::runtime_error(message.str());
    }
  }

  TeiOptions tei_options;
  tei_options.compat = config.compat;
  tei_options.allow_empty = true;
  const std::string output = serialize_tei(result.resource, tei_options);
  if (!config.output.empty()) write_file(config.output, output);

  if (config.loss_report) {
    std::ostringstream report;
    for (const auto& d : result.diagnostics) {
      if (is_loss(d)) report << d.to_string() << "\n";
    }
    write_file(*config.loss_report, report.str());
  }
  if (config.merge_report) {
    std::ostringstream report;
    for (const auto& d : result.diagnostics) {
      if (is_merge_report_kind(d)) report << d.to_string() << "\n";
    }
    write_file(*config.merge_report, report.str());
  }

  stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    started)
          .count();
  if (config.stats_report) {
    write_file(*config.stats_report, stats.summary());
  }

  if (config.strict &&
      (stats.loss_diagnostics > 0 || stats.conflict_diagnostics > 0)) {
    result.exit_code = 1;
  }
  return result;
}

RunResult run(const RunConfig& config) {
  if (config.inputs.empty()) {
    throw std::runtime_error("at least one input lexicon is required");
  }
  std::vector<std::string> documents;
  documents.reserve(config.inputs.size());
  for (const auto& path : config.inputs) {
    documents.push_back(read_file(path));
  }
  return run_on_documents(documents, config);
}

}  // namespace hpsg2lmf
