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

#include "hpsg2lmf/feature_structure.hpp"

#include <algorithm>

namespace hpsg2lmf {

namespace {

// TETE is the French spelling of the head feature; one canonical name.
std::string_view canonical_feature_name(std::string_view name) {
  return name == "TETE" ? std::string_view("HEAD") : name;
}

}  // namespace

FeatureValue FeatureValue::atom(std::string v) {
  FeatureValue out;
  out.kind = Kind::Atom;
  out.scalar = std::move(v);
  return out;
}

FeatureValue FeatureValue::text(std::string v) {
  FeatureValue out;
  out.kind = Kind::Text;
  out.scalar = std::move(v);
  return out;
}

FeatureValue FeatureValue::make_list(std::vector<FeatureValue> items) {
  FeatureValue out;
  out.kind = Kind::List;
  out.list = std::move(items);
  return out;
}

FeatureValue FeatureValue::make_avm(FeatureStructure fs) {
  FeatureValue out;
  out.kind = Kind::Avm;
  out.avm.push_back(std::move(fs));
  return out;
}

bool FeatureValue::is_empty_composite() const {
  if (kind == Kind::List) return list.empty();
  if (kind == Kind::Avm) return as_avm().empty();
  return false;
}

bool FeatureValue::operator==(const FeatureValue& other) const {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::Atom:
    case Kind::Text:
      return scalar == other.scalar;
    case Kind::List:
      return list == other.list;
    case Kind::Avm:
      return avm == other.avm;
  }
  return false;
}

const FeatureValue* FeatureStructure::find(std::string_view name) const {
  const auto wanted = canonical_feature_name(name);
  for (const auto& [feature_name, value] : features) {
    if (canonical_feature_name(feature_name) == wanted) return &value;
  }
  return nullptr;
}

void FeatureStructure::set(std::string name, FeatureValue value) {
  for (auto& [feature_name, existing] : features) {
    if (feature_name == name) {
      existing = std::move(value);
      return;
    }
  }
  features.emplace_back(std::move(name), std::move(value));
}

bool FeatureStructure::operator==(const FeatureStructure& other) const {
  return type_label == other.type_label && features == other.features;
}

const FeatureValue* get_path(const FeatureStructure& fs,
                             std::span<const std::string_view> path) {
  const FeatureStructure* current = &fs;
  const FeatureValue* value = nullptr;
  for (std::size_t i = 0; i < path.size(); ++i) {
    value = current->find(path[i]);
    if (value == nullptr) return nullptr;
    if (i + 1 < path.size()) {
      // Lists and scalars are terminal for path descent.
      if (!value->is_avm()) return nullptr;
      current = &value->as_avm();
    }
  }
  return value;
}

const FeatureValue* get_path(const FeatureStructure& fs,
                             std::initializer_list<std::string_view> path) {
  return get_path(fs, std::span<const std::string_view>(path.begin(),
                                                        path.size()));
}

const FeatureValue* find_first(const FeatureStructure& fs,
                               std::string_view name) {
  const auto wanted = canonical_feature_name(name);
  for (const auto& [feature_name, value] : fs.features) {
    if (canonical_feature_name(feature_name) == wanted) return &value;
  }
  for (const auto& [feature_name, value] : fs.features) {
    if (value.is_avm()) {
      if (const auto* found = find_first(value.as_avm(), name)) return found;
    }
  }
  return nullptr;
}

}  // namespace hpsg2lmf
