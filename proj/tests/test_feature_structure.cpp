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

#include <doctest.h>

#include "helpers.hpp"
#include "hpsg2lmf/feature_structure.hpp"

namespace hpsg2lmf {
namespace {

using testing::atom;
using testing::avm;

TEST_CASE("factories populate exactly one variant") {
  FeatureValue a = FeatureValue::atom("verbe");
  CHECK(a.is_atom());
  CHECK(a.scalar == "verbe");

  FeatureValue t = FeatureValue::text("كتب");
  CHECK(t.is_text());

  FeatureValue l = FeatureValue::make_list({a, t});
  CHECK(l.is_list());
  CHECK(l.list.size() == 2);

  FeatureValue v = FeatureValue::make_avm(avm({{"MAJ", a}}));
  CHECK(v.is_avm());
  CHECK(v.as_avm().features.size() == 1);
}

TEST_CASE("empty composites are values, not absences") {
  CHECK(FeatureValue::make_list({}).is_empty_composite());
  CHECK(FeatureValue::make_avm(avm({})).is_empty_composite());
  CHECK_FALSE(FeatureValue::atom("x").is_empty_composite());
  CHECK_FALSE(FeatureValue::make_list({atom("x")}).is_empty_composite());
}

TEST_CASE("find and set keep names unique and ordered") {
  FeatureStructure fs = avm({{"A", atom("1")}, {"B", atom("2")}});
  REQUIRE(fs.find("A") != nullptr);
  CHECK(fs.find("A")->scalar == "1");
  CHECK(fs.find("C") == nullptr);

  fs.set("A", atom("3"));
  CHECK(fs.features.size() == 2);
  CHECK(fs.find("A")->scalar == "3");
  CHECK(fs.features[0].first == "A");  // in-place replacement

  fs.set("C", atom("4"));
  CHECK(fs.features.size() == 3);
  CHECK(fs.features[2].first == "C");  // appended last
}

TEST_CASE("get_path descends nested AVMs") {
  FeatureStructure fs = avm(
      {{"SYNSEM",
        FeatureValue::make_avm(avm(
            {{"LOC",
              FeatureValue::make_avm(avm(
                  {{"CAT", FeatureValue::make_avm(avm(
                               {{"HEAD", FeatureValue::make_avm(avm(
                                             {{"MAJ", atom("nom")}}))}}))
                  }}))}}))}});

  const FeatureValue* maj =
      get_path(fs, {"SYNSEM", "LOC", "CAT", "HEAD", "MAJ"});
  REQUIRE(maj != nullptr);
  CHECK(maj->scalar == "nom");

  CHECK(get_path(fs, {"SYNSEM", "LOC", "NOPE"}) == nullptr);
  // Scalar before the final step: no descent possible.
  CHECK(get_path(fs, {"SYNSEM", "LOC", "CAT", "HEAD", "MAJ", "X"}) == nullptr);
}

TEST_CASE("TETE and HEAD are interchangeable on a path") {
  FeatureStructure fs = avm(
      {{"CAT", FeatureValue::make_avm(
                   avm({{"TETE", FeatureValue::make_avm(avm(
                                     {{"MAJ", atom("verbe")}}))}}))}});
  const FeatureValue* via_head = get_path(fs, {"CAT", "HEAD", "MAJ"});
  REQUIRE(via_head != nullptr);
  CHECK(via_head->scalar == "verbe");
  CHECK(get_path(fs, {"CAT", "TETE", "MAJ"}) == via_head);
}

TEST_CASE("a list value is a terminal for get_path") {
  FeatureStructure fs =
      avm({{"SPR", FeatureValue::make_list({atom("V"), atom("DEM")})}});
  const FeatureValue* spr = get_path(fs, {"SPR"});
  REQUIRE(spr != nullptr);
  CHECK(spr->is_list());
  // No descent through list elements by name.
  CHECK(get_path(fs, {"SPR", "CAT"}) == nullptr);
}

TEST_CASE("find_first prefers the shallowest match") {
  FeatureStructure fs = avm(
      {{"A", FeatureValue::make_avm(avm({{"X", atom("deep")}}))},
       {"X", atom("shallow")}});
  const FeatureValue* x = find_first(fs, "X");
  REQUIRE(x != nullptr);
  CHECK(x->scalar == "shallow");  // current level before any descent
  const FeatureValue* only_deep = find_first(fs, "X");
  REQUIRE(only_deep != nullptr);
  FeatureStructure nested = avm(
      {{"A", FeatureValue::make_avm(avm({{"X", atom("deep")}}))}});
  CHECK(find_first(nested, "X")->scalar == "deep");
  CHECK(find_first(fs, "Z") == nullptr);
}

TEST_CASE("structural equality is deep and order sensitive") {
  FeatureStructure a = avm({{"A", atom("1")}, {"B", atom("2")}});
  FeatureStructure b = avm({{"A", atom("1")}, {"B", atom("2")}});
  FeatureStructure c = avm({{"B", atom("2")}, {"A", atom("1")}});
  CHECK(a == b);
  CHECK_FALSE(a == c);
}

}  // namespace
}  // namespace hpsg2lmf
