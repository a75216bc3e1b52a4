/* Copyright 2026 The qsober Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "doctest.h"
#include "qsober/corpus.hpp"
#include "qsober/error.hpp"
#include "qsober/io.hpp"
#include "qsober/scenario.hpp"
#include "support.hpp"

using namespace qsober;

namespace {

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("no error raised");
  return Error(ErrorKind::kMalformedInput, "", "");
}

}  // namespace

TEST_CASE("quantale documents") {
  Quantale l = quantale_from_json(Json::parse(R"({"standard": "lukasiewicz", "n": 5})"));
  CHECK(l.name() == "lukasiewicz-5");
  Quantale b = quantale_from_json(Json::parse(R"({"standard": "boolean4"})"));
  CHECK(b.size() == 4);

  Quantale custom = quantale_from_json(
      Json::parse(R"({"labels": ["0", "1"], "leq": [[1, 1], [0, 1]], "tensor": [[0, 0], [0, 1]]})"));
  CHECK(custom.size() == 2);

  Json echo = quantale_to_json(l);
  CHECK(echo["residuation"][2][1] == 3);
  CHECK(echo["labels"][2] == "1/2");
  CHECK(echo["double_negation"] == true);
  CHECK(echo.contains("join"));
  CHECK(echo.contains("meet"));

  CHECK(error_of([] { quantale_from_json(Json::parse(R"({"labels": ["0"]})")); }).subject() == "/leq");
  CHECK(error_of([] { quantale_from_json(Json::parse(R"({"standard": "godel"})")); }).subject() == "/n");
  CHECK(error_of([] { quantale_from_json(Json::parse(R"({"standard": "product", "n": 3})")); }).kind() ==
        ErrorKind::kUnsupportedKind);
  CHECK(error_of([] { quantale_from_json(Json::parse(R"({"standard": "tropical", "n": 3})")); }).subject() ==
        "/standard");
  Error bad = error_of([] {
    quantale_from_json(Json::parse(R"({"labels": ["0", "1"], "leq": [[1, 2], [0, 1]], "tensor": [[0, 0], [0, 1]]})"));
  });
  CHECK(bad.subject() == "/leq/0/1");
  CHECK(error_of([] { parse_json("{\"a\": ", "f.json"); }).subject() == "f.json:byte 7");
}

TEST_CASE("space and cotopology documents") {
  auto q = testing::boolean4();
  Json doc = Json::parse(R"({"points": ["x", "y"], "fuzzy_sets": {"lambda": ["a", "b"]}})");
  SpaceFile sf = space_from_json(*q, doc);
  CHECK(sf.points.names() == std::vector<std::string>{"x", "y"});
  CHECK(sf.fuzzy_sets.at("lambda") == testing::set(*q, {"a", "b"}));

  Error e = error_of([&] { space_from_json(*q, Json::parse(R"({"points": ["x"], "fuzzy_sets": {"m": ["c"]}})")); });
  CHECK(e.subject() == "/fuzzy_sets/m/0");
  e = error_of([&] { space_from_json(*q, Json::parse(R"({"points": ["x", "x"]})")); });
  CHECK(e.kind() == ErrorKind::kMalformedInput);

  Caps caps;
  Cotopology disc = cotopology_from_json(q, Json::parse(R"({"points": ["x", "y"], "preset": "discrete"})"), caps);
  CHECK(disc.size() == 16);
  Cotopology gen = cotopology_from_json(
      q, Json::parse(R"({"points": ["x", "y"], "subbasis": [["a", "0"]], "mode": "strong"})"), caps);
  CHECK(gen.mode() == Mode::kStrong);
  CHECK(gen.contains(testing::set(*q, {"a", "0"})));
  e = error_of([&] { cotopology_from_json(q, Json::parse(R"({"points": ["x"], "mode": "weird"})"), caps); });
  CHECK(e.subject() == "/mode");
  e = error_of([&] { cotopology_from_json(q, Json::parse(R"({"points": ["x"], "subbasis": [["a", "b"]]})"), caps); });
  CHECK(e.subject() == "/subbasis/0");

  Json out = cotopology_to_json(gen);
  CHECK(out["closed"].size() == gen.size());
  CHECK(out["closed"][0]["index"] == 0);
  CHECK(out["axioms"]["stratified"] == true);
}

TEST_CASE("order and crisp documents") {
  auto q = testing::godel(3);
  auto [pts, r] = qorder_from_json(*q, Json::parse(R"({"points": ["a", "b"], "R": [["1", "1/2"], ["0", "1"]]})"));
  CHECK(r(0, 1) == 1);
  CHECK(qorder_to_json(*q, pts, r)["R"][0][1] == "1/2");
  CHECK(error_of([&] { qorder_from_json(*q, Json::parse(R"({"points": ["a", "b"], "R": [["1", "1"], ["0", "0"]]})")); })
            .kind() == ErrorKind::kNotReflexive);

  auto [cp, crisp] = crisp_from_json(Json::parse(R"({"points": ["x", "y"], "closed_subsets": [[], ["x"], ["x", "y"]]})"));
  CHECK(crisp.closed() == std::vector<Subset>{0, 1, 3});
  CHECK(crisp_to_json(cp, crisp)["closed_subsets"][1] == Json::array({"x"}));
  CHECK(error_of([] { crisp_from_json(Json::parse(R"({"points": ["x"], "closed_subsets": [["z"]]})")); }).subject() ==
        "/closed_subsets/0/0");
  CHECK(error_of([] { crisp_from_json(Json::parse(R"({"points": ["x", "y"], "closed_subsets": [["x"]]})")); }).kind() ==
        ErrorKind::kLawViolation);
}

TEST_CASE("sober report fields") {
  auto q = testing::boolean4();
  Cotopology disc = Cotopology::discrete(q, PointSet({"x", "y"}), Caps{});
  Json r = sober_report_to_json(disc, is_sober(disc));
  CHECK(r["verdict"] == "not_sober");
  CHECK(r.contains("irreducibles"));
  CHECK(r["eta"].contains("x"));
  CHECK(r["witnesses"].is_array());
  CHECK(r.dump() == sober_report_to_json(disc, is_sober(disc)).dump());
}

TEST_CASE("built-in scenarios") {
  const auto& reg = builtin_registry();
  for (const char* name : {"boolean4-discrete-not-sober", "lowen-boolean4-breaks-good-extension",
                           "hausdorff-implies-sober-godel3", "hausdorff-implies-sober-boolean4-refused",
                           "good-extension-godel3-discrete", "one-point-indiscrete-sober"})
    CHECK(find_scenario(reg, name) != nullptr);
  for (const auto& s : reg) {
    CAPTURE(s.name);
    ScenarioOutcome out = run_scenario(s, Caps{});
    CHECK(out.passed());
    CHECK(out.report.dump() == run_scenario(s, Caps{}).report.dump());
  }
}

TEST_CASE("scenario mismatches are reported") {
  Json doc = Json::parse(R"({"scenarios": [{
      "name": "wrong", "description": "", "analysis": "sober", "provenance": "test",
      "quantale": {"standard": "boolean4"}, "space": {"points": ["x", "y"], "preset": "discrete"},
      "expect": {"verdict": "sober", "irreducible": [["a", "a"]], "not_point_closure": [["1", "0"]]}}]})");
  auto reg = parse_registry(doc);
  ScenarioOutcome out = run_scenario(reg[0], Caps{});
  CHECK_FALSE(out.passed());
  CHECK(out.mismatches.size() == 3);

  CHECK_THROWS_AS(parse_registry(Json::parse(R"({"scenarios": [{"name": "x"}]})")), Error);
  CHECK_THROWS_AS(parse_registry(Json::parse(R"({"list": []})")), Error);
}

TEST_CASE("corpus is deterministic") {
  CorpusBounds b;
  auto one = make_corpus(0, b, Caps{});
  auto two = make_corpus(0, b, Caps{});
  REQUIRE(one.size() == b.count);
  CHECK(one.size() >= 50);
  bool any_stratified = false;
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].name == two[i].name);
    CHECK(one[i].space.closed() == two[i].space.closed());
    CHECK(one[i].space.quantale().size() <= b.max_quantale);
    CHECK(one[i].space.point_count() <= b.max_points);
    any_stratified = any_stratified || one[i].space.is_stratified();
  }
  CHECK(any_stratified);
  auto other = make_corpus(1, b, Caps{});
  bool differs = false;
  for (std::size_t i = 0; i < one.size(); ++i) differs = differs || one[i].name != other[i].name;
  CHECK(differs);

  CorpusBounds chains;
  chains.chains_only = true;
  for (const auto& m : make_corpus(2, chains, Caps{})) CHECK(is_linear(m.space.quantale()));
  CorpusBounds none;
  none.max_quantale = 1;
  CHECK_THROWS_AS(make_corpus(0, none, Caps{}), Error);
}
