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

#include "hpsg2lmf/projection.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hpsg2lmf {

const char* target_class_name(TargetClass t) {
  switch (t) {
    case TargetClass::LexicalEntry: return "LexicalEntry";
    case TargetClass::Form: return "Form";
    case TargetClass::SyntacticArgument: return "SyntacticArgument";
    case TargetClass::SubcatFrame: return "SubcatFrame";
    case TargetClass::SemanticArgument: return "SemanticArgument";
  }
  return "unknown";
}

namespace {

// Flat textual rendering for values that end up in a single attribute.
std::string render_value(const FeatureValue& value) {
  switch (value.kind) {
    case FeatureValue::Kind::Atom:
    case FeatureValue::Kind::Text:
      return value.scalar;
    case FeatureValue::Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < value.list.size(); ++i) {
        if (i > 0) out += ", ";
        out += render_value(value.list[i]);
      }
      return out + "]";
    }
    case FeatureValue::Kind::Avm: {
      std::string out = "{";
      bool first = true;
      for (const auto& [name, v] : value.as_avm().features) {
        if (!first) out += ", ";
        first = false;
        out += name + "=" + render_value(v);
      }
      return out + "}";
    }
  }
  return "";
}

std::string passthrough_attribute(std::string_view feature_name) {
  return std::string(kPassthroughPrefix) + std::string(feature_name);
}

std::string mapped_attribute(const FeatureDescriptor* descriptor,
                             std::string_view feature_name) {
  if (descriptor != nullptr && !descriptor->lmf_attribute.empty()) {
    return descriptor->lmf_attribute;
  }
  return passthrough_attribute(feature_name);
}

TargetClass target_for_scope(const FeatureDescriptor* descriptor) {
  if (descriptor != nullptr && descriptor->scope == FeatureScope::FormLevel) {
    return TargetClass::Form;
  }
  return TargetClass::LexicalEntry;
}

void flatten_into(const FeatureStructure& fs, const FeatureRegistry& registry,
                  std::vector<FlatFeature>& out) {
  for (const auto& [name, value] : fs.features) {
    std::string_view canonical = name == "TETE" ? "HEAD" : name;
    const FeatureDescriptor* descriptor = registry.lookup(canonical);
    if (descriptor != nullptr && descriptor->structural && value.is_avm()) {
      flatten_into(value.as_avm(), registry, out);
    } else {
      out.push_back({std::string(canonical), &value});
    }
  }
}

// Converts one element of a complex syntactic value into a
// SyntacticArgument emission group.
void emit_argument(const FlatFeature& feature, const FeatureValue& element,
                   std::string function, const std::string& group,
                   ProjectionContext& ctx) {
  auto emit = [&](std::string attribute, std::string value) {
    Emission e;
    e.target = TargetClass::SyntacticArgument;
    e.attribute = std::move(attribute);
    e.value = std::move(value);
    e.grouping_key = group;
    e.rule_id = "R1syn";
    e.source_feature = feature.name;
    ctx.emissions.push_back(std::move(e));
  };

  std::string constituent;
  std::string label;
  std::vector<std::pair<std::string, std::string>> extra;

  if (element.is_atom() || element.is_text()) {
    constituent = element.scalar;
  } else if (element.is_avm()) {
    std::vector<FlatFeature> parts;
    flatten_into(element.as_avm(), *ctx.registry, parts);
    for (const auto& part : parts) {
      if (part.name == "FUNCTION" || part.name == "FONCTION") {
        function = render_value(*part.value);
      } else if (part.name == "CAT" || part.name == "CONST" ||
                 part.name == "CONSTITUENT" || part.name == "MAJ") {
        constituent = render_value(*part.value);
      } else if (part.name == "LABEL") {
        label = render_value(*part.value);
      } else {
        const FeatureDescriptor* d = ctx.registry->lookup(part.name);
        std::string attribute =
            (d != nullptr && d->layer == FeatureLayer::Morphological)
                ? mapped_attribute(d, part.name)
                : passthrough_attribute(part.name);
        extra.emplace_back(std::move(attribute), render_value(*part.value));
      }
    }
  } else {
    constituent = render_value(element);
  }
  if (constituent.empty()) constituent = "XP";

  emit("function", std::move(function));
  emit("constituent", std::move(constituent));
  if (!label.empty()) emit("label", std::move(label));
  for (auto& [attribute, value] : extra) {
    emit(std::move(attribute), std::move(value));
  }
}

// Positional functions for valence lists without explicit labels.
std::string positional_function(std::size_t index) {
  if (index == 0) return "subject";
  if (index == 1) return "object";
  return "oblique";
}

}  // namespace

std::vector<FlatFeature> flatten_features(const FeatureStructure& body,
                                          const FeatureRegistry& registry) {
  std::vector<FlatFeature> out;
  flatten_into(body, registry, out);
  return out;
}

std::vector<ProjectionRule> builtin_rules() {
  std::vector<ProjectionRule> rules;

  // R9m: MAJ and PHON on particles and non-inflecting entries project as
  // plain LexicalEntry data (att = GrammaticalCategory for MAJ).
  rules.push_back(
      {"R9m",
       [](const FlatFeature& f, const FeatureDescriptor*,
          const ProjectionContext& ctx) {
         if (f.name != "MAJ" && f.name != "PHON") return false;
         return ctx.category == LexicalCategory::Particle ||
                !ctx.admits_inflection;
       },
       [](const FlatFeature& f, const FeatureDescriptor*,
          ProjectionContext& ctx) {
         Emission e;
         e.rule_id = "R9m";
         e.source_feature = f.name;
         if (f.name == "PHON") {
           e.target = TargetClass::Form;
           e.attribute = "orth";
         } else {
           e.target = TargetClass::LexicalEntry;
           e.attribute = "grammaticalCategory";
         }
         e.value = render_value(*f.value);
         ctx.emissions.push_back(std::move(e));
         ++ctx.matched_features;
       }});

  // R5m family: morphological features with an LMF equivalent; target
  // class follows the registry scope (entry vs inflected form).
  rules.push_back(
      {"R5m",
       [](const FlatFeature&, const FeatureDescriptor* d,
          const ProjectionContext&) {
         return d != nullptr && !d->structural &&
                d->layer == FeatureLayer::Morphological;
       },
       [](const FlatFeature& f, const FeatureDescriptor* d,
          ProjectionContext& ctx) {
         Emission e;
         e.rule_id = "R5m";
         e.source_feature = f.name;
         if (f.name == "PHON") {
           e.target = TargetClass::Form;
           e.attribute = "orth";
         } else {
           e.target = target_for_scope(d);
           e.attribute = mapped_attribute(d, f.name);
         }
         e.value = render_value(*f.value);
         ctx.emissions.push_back(std::move(e));
         ++ctx.matched_features;
       }});

  // R1syn: complex-valued syntactic features become SyntacticArgument
  // groups, one application per value.
  rules.push_back(
      {"R1syn",
       [](const FlatFeature& f, const FeatureDescriptor* d,
          const ProjectionContext&) {
         return d != nullptr && d->layer == FeatureLayer::Syntactic &&
                !d->lmf_attribute.empty() &&
                (f.value->is_list() || f.value->is_avm());
       },
       [](const FlatFeature& f, const FeatureDescriptor* d,
          ProjectionContext& ctx) {
         if (f.value->is_empty_composite()) {
           ++ctx.skipped_empty;
           return;
         }
         ++ctx.matched_features;
         const bool positional = f.name == "S-ARG";

         if (f.value->is_list()) {
           const auto& items = f.value->list;
           const bool frame_alternatives =
               positional &&
               std::all_of(items.begin(), items.end(),
                           [](const FeatureValue& v) { return v.is_list(); });
           if (frame_alternatives) {
             // An explicit frame list: one subcat frame per alternative.
             for (const auto& alternative : items) {
               std::string frame = "sb" + std::to_string(ctx.frame_count++);
               std::size_t arg = 0;
               for (const auto& element : alternative.list) {
                 emit_argument(f, element, positional_function(arg),
                               frame + ":arg" + std::to_string(arg), ctx);
                 ++arg;
               }
             }
             return;
           }
           for (std::size_t i = 0; i < items.size(); ++i) {
             std::string function =
                 positional ? positional_function(i) : d->lmf_attribute;
             emit_argument(f, items[i], std::move(function),
                           "sb0:arg" +
                               std::to_string(ctx.shared_frame_args++),
                           ctx);
           }
         } else {
           emit_argument(f, *f.value,
                         positional ? positional_function(0)
                                    : d->lmf_attribute,
                         "sb0:arg" + std::to_string(ctx.shared_frame_args++),
                         ctx);
         }
       }});

  // R2syn: atomic syntactic features with an LMF equivalent project as a
  // plain attribute on the class selected by their registry scope.
  rules.push_back(
      {"R2syn",
       [](const FlatFeature& f, const FeatureDescriptor* d,
          const ProjectionContext&) {
         return d != nullptr && d->layer == FeatureLayer::Syntactic &&
                !d->lmf_attribute.empty() &&
                (f.value->is_atom() || f.value->is_text());
       },
       [](const FlatFeature& f, const FeatureDescriptor* d,
          ProjectionContext& ctx) {
         Emission e;
         e.rule_id = "R2syn";
         e.source_feature = f.name;
         e.target = target_for_scope(d);
         e.attribute = d->lmf_attribute;
         e.value = f.value->scalar;
         ctx.emissions.push_back(std::move(e));
         ++ctx.matched_features;
       }});

  // R1sem: a non-empty NUCLEUS yields one SemanticArgument per role.
  rules.push_back(
      {"R1sem",
       [](const FlatFeature&, const FeatureDescriptor* d,
          const ProjectionContext&) {
         return d != nullptr && d->layer == FeatureLayer::Semantic;
       },
       [](const FlatFeature& f, const FeatureDescriptor*,
          ProjectionContext& ctx) {
         if (f.value->is_empty_composite() ||
             (!f.value->is_avm() && !f.value->is_list())) {
           ++ctx.skipped_empty;
           return;
         }
         ++ctx.matched_features;
         std::string predicate =
             "sp" + std::to_string(ctx.predicate_count++);
         auto emit_role = [&](const std::string& role,
                              const FeatureValue& value) {
           if (role != "agent-noun" && role != "patient-noun") {
             ctx.diagnostics.push_back(
                 {DiagKind::UnknownRole,
                  "semantic role '" + role + "' outside the registered set",
                  std::nullopt, ""});
           }
           Emission e;
           e.target = TargetClass::SemanticArgument;
           e.attribute = role;
           e.value = render_value(value);
           e.grouping_key = predicate;
           e.rule_id = "R1sem";
           e.source_feature = f.name;
           ctx.emissions.push_back(std::move(e));
         };
         if (f.value->is_avm()) {
           for (const auto& [role, value] : f.value->as_avm().features) {
             emit_role(role, value);
           }
         } else {
           for (const auto& item : f.value->list) {
             emit_role("agent-noun", item);
           }
         }
       }});

  // Registered features without a published LMF target keep their value
  // under a marker-prefixed attribute; no information is lost.
  rules.push_back(
      {"Rkeep",
       [](const FlatFeature&, const FeatureDescriptor* d,
          const ProjectionContext&) { return d != nullptr; },
       [](const FlatFeature& f, const FeatureDescriptor* d,
          ProjectionContext& ctx) {
         Emission e;
         e.rule_id = "Rkeep";
         e.source_feature = f.name;
         e.target = target_for_scope(d);
         e.attribute = passthrough_attribute(f.name);
         e.value = render_value(*f.value);
         ctx.emissions.push_back(std::move(e));
         ++ctx.matched_features;
       }});

  // Fallback: unregistered features pass through with a loss report.
  rules.push_back(
      {"Rloss",
       [](const FlatFeature&, const FeatureDescriptor*,
          const ProjectionContext&) { return true; },
       [](const FlatFeature& f, const FeatureDescriptor*,
          ProjectionContext& ctx) {
         Emission e;
         e.rule_id = "Rloss";
         e.source_feature = f.name;
         e.target = TargetClass::LexicalEntry;
         e.attribute = passthrough_attribute(f.name);
         e.value = render_value(*f.value);
         e.passthrough = true;
         ctx.emissions.push_back(std::move(e));
         ++ctx.passthrough_features;
         ctx.diagnostics.push_back(
             {DiagKind::UnknownFeature,
              "feature '" + f.name +
                  "' is not in the feature base; preserved as " +
                  passthrough_attribute(f.name),
              std::nullopt, ""});
       }});

  return rules;
}

std::map<std::string, std::string> mapping_table() {
  std::map<std::string, std::string> out;
  FeatureRegistry registry = FeatureRegistry::builtin();
  for (const FeatureDescriptor* d : registry.all()) {
    if (d->structural || d->lmf_attribute.empty()) continue;
    const bool atomic_syntactic = d->name == "VOICE" || d->name == "RESTIND";
    if (d->layer == FeatureLayer::Morphological || atomic_syntactic) {
      out[d->name] = d->lmf_attribute;
    }
  }
  return out;
}

ProjectionResult project_entry(const HpsgEntry& entry,
                               LexicalCategory category,
                               bool admits_inflection,
                               const FeatureRegistry& registry,
                               const std::vector<ProjectionRule>& rules,
                               const ProjectionOptions& options) {
  ProjectionContext ctx;
  ctx.category = category;
  ctx.admits_inflection = admits_inflection;
  ctx.registry = &registry;

  for (const FlatFeature& feature : flatten_features(entry.body, registry)) {
    const FeatureDescriptor* descriptor = registry.lookup(feature.name);
    if (descriptor != nullptr && !descriptor->structural) {
      if (!descriptor->applies_to(category)) {
        ctx.diagnostics.push_back(
            {DiagKind::CategoryMismatch,
             "feature '" + feature.name + "' is not declared for " +
                 category_name(category) + " entries",
             entry.ordinal, ""});
      }
      if ((feature.value->is_atom() || feature.value->is_text()) &&
          !descriptor->in_domain(feature.value->scalar)) {
        ctx.diagnostics.push_back(
            {DiagKind::ValueOutsideDomain,
             "value '" + feature.value->scalar + "' of '" + feature.name +
                 "' is outside the declared domain",
             entry.ordinal, ""});
      }
    }
    for (const auto& rule : rules) {
      if (rule.matches(feature, descriptor, ctx)) {
        rule.apply(feature, descriptor, ctx);
        break;
      }
    }
  }

  // Optional value-spelling translation and attribute overrides.
  for (auto& emission : ctx.emissions) {
    if (auto it = options.value_map.find(emission.value);
        it != options.value_map.end()) {
      emission.value = it->second;
    }
    if (emission.attribute != "orth") {
      if (auto it = options.attribute_overrides.find(emission.source_feature);
          it != options.attribute_overrides.end()) {
        emission.attribute = it->second;
      }
    }
  }

  ProjectionResult result;
  result.emissions = std::move(ctx.emissions);
  result.diagnostics = std::move(ctx.diagnostics);
  result.matched_features = ctx.matched_features;
  result.passthrough_features = ctx.passthrough_features;
  result.skipped_empty = ctx.skipped_empty;
  for (auto& diagnostic : result.diagnostics) {
    if (!diagnostic.entry_index) diagnostic.entry_index = entry.ordinal;
  }
  return result;
}

}  // namespace hpsg2lmf
