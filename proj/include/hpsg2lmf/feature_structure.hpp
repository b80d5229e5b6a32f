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

#ifndef HPSG2LMF_FEATURE_STRUCTURE_HPP
#define HPSG2LMF_FEATURE_STRUCTURE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hpsg2lmf {

struct FeatureStructure;

/// One value slot of an attribute-value matrix.  Exactly one variant is
/// populated: an atomic symbol, string content, an ordered list, or a
/// nested AVM.  An empty list is a real value, distinct from an absent
/// feature.
struct FeatureValue {
  enum class Kind { Atom, Text, List, Avm };

  Kind kind = Kind::Atom;
  std::string scalar;              // Atom / Text
  std::vector<FeatureValue> list;  // List
  std::vector<FeatureStructure> avm;  // Avm: holds exactly one element

  static FeatureValue atom(std::string v);
  static FeatureValue text(std::string v);
  static FeatureValue make_list(std::vector<FeatureValue> items);
  static FeatureValue make_avm(FeatureStructure fs);

  bool is_atom() const { return kind == Kind::Atom; }
  bool is_text() const { return kind == Kind::Text; }
  bool is_list() const { return kind == Kind::List; }
  bool is_avm() const { return kind == Kind::Avm; }

  /// The nested AVM; only valid when is_avm().
  const FeatureStructure& as_avm() const { return avm.front(); }

  /// True for an empty list or an AVM with no features.
  bool is_empty_composite() const;

  bool operator==(const FeatureValue& other) const;
};

/// An attribute-value matrix: ordered features with unique names.
struct FeatureStructure {
  std::vector<std::pair<std::string, FeatureValue>> features;
  std::optional<std::string> type_label;

  const FeatureValue* find(std::string_view name) const;
  void set(std::string name, FeatureValue value);

  bool empty() const { return features.empty(); }

  bool operator==(const FeatureStructure& other) const;
};

/// One HPSG lexical entry: the surface form plus its full AVM.
struct HpsgEntry {
  std::string phon;
  FeatureStructure body;
  std::string source_file;
  std::size_t ordinal = 0;
};

/// Descends through nested AVMs along `path`.  Absent at any step (or a
/// non-AVM value before the final step) yields nullptr.  TETE and HEAD are
/// treated as the same feature name.
const FeatureValue* get_path(const FeatureStructure& fs,
                             std::span<const std::string_view> path);

const FeatureValue* get_path(const FeatureStructure& fs,
                             std::initializer_list<std::string_view> path);

/// Finds the feature with the given terminal name, checking the current
/// level before descending into AVM values (shallowest match wins).
const FeatureValue* find_first(const FeatureStructure& fs,
                               std::string_view name);

}  // namespace hpsg2lmf

#endif  // HPSG2LMF_FEATURE_STRUCTURE_HPP
