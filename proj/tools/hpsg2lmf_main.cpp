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
// Command-line front end.  Subcommands:
//   convert   HPSG lexica -> one LMF/TEI resource
//   validate  parse an LMF/TEI document and report model violations
//   gen       emit a seeded synthetic HPSG lexicon
//   inspect   print the projected emissions for one entry of a lexicon
// Exit codes: 0 success, 1 strict-mode diagnostics, 2 fatal error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hpsg2lmf/fs_xml.hpp"
#include "hpsg2lmf/lmf_tei.hpp"
#include "hpsg2lmf/pipeline.hpp"

namespace {

std::string read_file_or_throw(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int run_convert(const hpsg2lmf::RunConfig& config, bool quiet) {
  hpsg2lmf::RunResult result = hpsg2lmf::run(config);
  if (!quiet) {
    std::cerr << result.stats.summary();
    for (const auto& diagnostic : result.diagnostics) {
      std::cerr << diagnostic.to_string() << "\n";
    }
  }
  return result.exit_code;
}

int run_validate(const std::string& path) {
  hpsg2lmf::TeiParseResult parsed =
      hpsg2lmf::parse_tei(read_file_or_throw(path));
  auto violations = hpsg2lmf::validate(parsed.resource);
  for (const auto& diagnostic : parsed.diagnostics) {
    std::cerr << diagnostic.to_string() << "\n";
  }
  for (const auto& violation : violations) {
    std::cerr << violation.entry_id << ": " << violation.description << "\n";
  }
  if (!violations.empty()) return 1;
  std::size_t entries = 0;
  for (const auto& lexicon : parsed.resource.lexicons) {
    entries += lexicon.entries.size();
  }
  std::cout << "valid: " << entries << " entries\n";
  return 0;
}

int run_gen(unsigned long long seed, const hpsg2lmf::SyntheticCounts& counts,
            const std::string& output) {
  std::string document = hpsg2lmf::generate_synthetic_lexicon(seed, counts);
  if (output.empty() || output == "-") {
    std::cout << document;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + output);
    out << document;
  }
  return 0;
}

int run_inspect(const std::string& path, std::size_t index) {
  hpsg2lmf::LexiconParseResult parsed =
      hpsg2lmf::parse_lexicon(read_file_or_throw(path), path);
  if (index >= parsed.entries.size()) {
    throw std::runtime_error("entry index out of range: have " +
                             std::to_string(parsed.entries.size()) +
                             " loadable entries");
  }
  const hpsg2lmf::HpsgEntry& entry = parsed.entries[index];
  hpsg2lmf::DiagnosticList diagnostics;
  auto category = hpsg2lmf::classify(entry, diagnostics);
  if (!category) {
    throw std::runtime_error("entry has no recognisable category");
  }
  hpsg2lmf::FeatureRegistry registry = hpsg2lmf::FeatureRegistry::builtin();
  bool admits = hpsg2lmf::admits_inflected_forms(entry, *category, registry,
                                                 diagnostics);
  hpsg2lmf::ProjectionResult projection = hpsg2lmf::project_entry(
      entry, *category, admits, registry, hpsg2lmf::builtin_rules());

  std::cout << "entry\t" << entry.phon << "\t"
            << hpsg2lmf::category_name(*category) << "\t"
            << (admits ? "inflecting" : "non-inflecting") << "\n";
  for (const auto& emission : projection.emissions) {
    std::cout << emission.rule_id << "\t"
              << hpsg2lmf::target_class_name(emission.target) << "\t"
              << emission.attribute << "\t" << emission.value;
    if (!emission.grouping_key.empty()) {
      std::cout << "\t" << emission.grouping_key;
    }
    std::cout << "\n";
  }
  for (const auto& diagnostic : projection.diagnostics) {
    std::cerr << diagnostic.to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arabic HPSG lexicon to LMF/TEI converter"};
  app.require_subcommand(1);

  hpsg2lmf::RunConfig config;
  bool quiet = false;
  std::string registry_path;
  std::string rules_path;
  std::string values_path;
  std::string loss_path;
  std::string merge_path;
  std::string stats_path;

  CLI::App* convert =
      app.add_subcommand("convert", "Convert HPSG lexica to LMF/TEI");
  convert->add_option("--input,-i", config.inputs, "Input lexicon file")
      ->required()
      ->expected(-1);
  convert->add_option("--output,-o", config.output, "Output TEI file")
      ->required();
  convert->add_option("--registry", registry_path,
                      "Feature registry override table");
  convert->add_option("--rules", rules_path,
                      "Per-feature LMF attribute overrides");
  convert->add_option("--values", values_path,
                      "Value spelling translation table");
  convert->add_flag("--strict", config.strict,
                    "Exit 1 on any loss or merge-conflict diagnostic");
  convert->add_flag("--compat", config.compat,
                    "Suppress syntactic/semantic extension blocks");
  convert->add_option("--jobs", config.jobs, "Parallel projection workers");
  convert->add_option("--loss-report", loss_path, "Write loss report here");
  convert->add_option("--merge-report", merge_path, "Write merge report here");
  convert->add_option("--stats", stats_path, "Write run statistics here");
  convert->add_flag("--quiet", quiet, "Suppress stats and diagnostics");

  std::string validate_path;
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Validate an LMF/TEI document");
  validate_cmd->add_option("input", validate_path, "TEI file")->required();

  unsigned long long seed = 1;
  hpsg2lmf::SyntheticCounts counts;
  std::string gen_output;
  CLI::App* gen =
      app.add_subcommand("gen", "Generate a seeded synthetic HPSG lexicon");
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--verbs", counts.verbs, "Verb families");
  gen->add_option("--nouns", counts.nouns, "Noun families");
  gen->add_option("--particles", counts.particles, "Particle entries");
  gen->add_option("--output,-o", gen_output, "Output file (default stdout)");

  std::string inspect_path;
  std::size_t inspect_index = 0;
  CLI::App* inspect =
      app.add_subcommand("inspect", "Print one entry's projected emissions");
  inspect->add_option("input", inspect_path, "Input lexicon file")->required();
  inspect->add_option("--entry", inspect_index, "Entry index (default 0)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (convert->parsed()) {
      if (!registry_path.empty()) config.registry_override = registry_path;
      if (!rules_path.empty()) config.attribute_overrides = rules_path;
      if (!values_path.empty()) config.value_map = values_path;
      if (!loss_path.empty()) config.loss_report = loss_path;
      if (!merge_path.empty()) config.merge_report = merge_path;
      if (!stats_path.empty()) config.stats_report = stats_path;
      return run_convert(config, quiet);
    }
    if (validate_cmd->parsed()) return run_validate(validate_path);
    if (gen->parsed()) return run_gen(seed, counts, gen_output);
    if (inspect->parsed()) return run_inspect(inspect_path, inspect_index);
  } catch (const hpsg2lmf::ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 2;
}
