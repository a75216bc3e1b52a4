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

#include "qsober/scenario.hpp"

#include <algorithm>

#include "qsober/duality.hpp"
#include "qsober/error.hpp"
#include "qsober/registry_data.hpp"
#include "qsober/sobriety.hpp"

namespace qsober {
namespace {

const std::vector<std::string> kAnalyses = {"sober", "lowen", "good-extension", "hausdorff-sober",
                                            "chain-generation"};

Json irreducible_values(const Quantale& q, const std::vector<FuzzySet>& irr) {
  Json out = Json::array();
  for (const auto& f : irr) out.push_back(fuzzy_set_to_json(q, f));
  return out;
}

Json point_closures(const Cotopology& tau) {
  Json out = Json::object();
  for (std::size_t x = 0; x < tau.point_count(); ++x)
    out[tau.points().name(x)] =
        fuzzy_set_to_json(tau.quantale(), closure(tau, point_indicator(tau.quantale(), tau.point_count(), x)));
  return out;
}

// Membership checks for "irreducible" and "not_point_closure" expectations.
void expect_sets(const Json& expect, const Json& report, std::vector<std::string>& mismatches) {
  if (expect.contains("irreducible")) {
    for (const Json& f : expect["irreducible"]) {
      const Json& irr = report["irreducible_values"];
      if (std::find(irr.begin(), irr.end(), f) == irr.end())
        mismatches.push_back("irreducible: " + f.dump() + " is not an irreducible closed set");
    }
  }
  if (expect.contains("not_point_closure")) {
    for (const Json& f : expect["not_point_closure"]) {
      for (auto it = report["point_closures"].begin(); it != report["point_closures"].end(); ++it)
        if (it.value() == f)
          mismatches.push_back("not_point_closure: " + f.dump() + " is the closure of " + it.key());
    }
  }
}

void sober_fields(const Cotopology& tau, const SoberReport& sober, Json& report) {
  report["space"] = {{"points", tau.points().names()}, {"mode", std::string(to_string(tau.mode()))},
                     {"closed_sets", tau.size()}};
  report["stratified"] = tau.is_stratified();
  report["verdict"] = std::string(to_string(sober.verdict));
  report["sober_report"] = sober_report_to_json(tau, sober);
  report["irreducible_values"] = irreducible_values(tau.quantale(), sober.irreducibles);
  report["point_closures"] = point_closures(tau);
  Json witnesses = Json::array();
  for (std::size_t w : sober.witnesses) witnesses.push_back(fuzzy_set_to_json(tau.quantale(), sober.irreducibles[w]));
  report["witnesses"] = std::move(witnesses);
}

void run_analysis(const Scenario& s, std::shared_ptr<const Quantale> q, const Caps& caps, Json& report) {
  if (s.analysis == "sober") {
    Cotopology tau = cotopology_from_json(q, s.space, caps);
    sober_fields(tau, is_sober(tau), report);
    report["hausdorff"] = is_hausdorff(tau, caps);
  } else if (s.analysis == "lowen") {
    // Computes both sides directly, without the linearity precondition of
    // good_extension_check, so non-linear counterexamples can be shown.
    auto [points, crisp] = crisp_from_json(s.space);
    report["crisp_sober"] = is_crisp_sober(crisp);
    Cotopology tau = lowen(q, points, crisp, caps);
    sober_fields(tau, is_sober(tau), report);
  } else if (s.analysis == "good-extension") {
    auto [points, crisp] = crisp_from_json(s.space);
    auto check = good_extension_check(q, points, crisp, caps);
    report["crisp_sober"] = check.crisp_sober;
    report["verdict"] = std::string(to_string(check.fuzzy.verdict));
    report["agrees"] = check.agrees;
  } else if (s.analysis == "hausdorff-sober") {
    Cotopology tau = cotopology_from_json(q, s.space, caps);
    auto check = hausdorff_implies_sober_check(tau, caps);
    sober_fields(tau, check.sober, report);
    report["hausdorff"] = check.hausdorff;
    report["implication_holds"] = check.implication_holds;
  } else if (s.analysis == "chain-generation") {
    Cotopology tau = cotopology_from_json(q, s.space, caps);
    SoberReport sober = is_sober(tau);
    sober_fields(tau, sober, report);
    // Every irreducible should be x -> id for some point x of the chain.
    FuzzySet id{q->elements()};
    bool all_residual = true;
    for (const auto& f : sober.irreducibles) {
      bool found = false;
      for (Element x : q->elements()) found = found || residual_scale(*q, x, id) == f;
      all_residual = all_residual && found;
    }
    report["irreducibles_are_residuals_of_id"] = all_residual;
  }
}

}  // namespace

std::vector<Scenario> parse_registry(const Json& doc) {
  if (!doc.is_object() || !doc.contains("scenarios") || !doc["scenarios"].is_array())
    throw Error(ErrorKind::kMalformedInput, "/scenarios", "expected an array of scenarios");
  std::vector<Scenario> out;
  const Json& list = doc["scenarios"];
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "/scenarios/" + std::to_string(i);
    const Json& e = list[i];
    auto str = [&](const char* key) {
      if (!e.contains(key) || !e[key].is_string())
        throw Error(ErrorKind::kMalformedInput, path + "/" + key, "expected a string");
      return e[key].get<std::string>();
    };
    auto obj = [&](const char* key) {
      if (!e.contains(key) || !e[key].is_object())
        throw Error(ErrorKind::kMalformedInput, path + "/" + key, "expected an object");
      return e[key];
    };
    Scenario s;
    s.name = str("name");
    s.description = str("description");
    s.analysis = str("analysis");
    s.provenance = str("provenance");
    s.exploratory = e.value("exploratory", false);
    s.quantale = obj("quantale");
    s.space = obj("space");
    s.expect = obj("expect");
    if (std::find(kAnalyses.begin(), kAnalyses.end(), s.analysis) == kAnalyses.end())
      throw Error(ErrorKind::kMalformedInput, path + "/analysis", "unknown analysis '" + s.analysis + "'");
    if (find_scenario(out, s.name))
      throw Error(ErrorKind::kMalformedInput, path + "/name", "duplicate scenario '" + s.name + "'");
    out.push_back(std::move(s));
  }
  return out;
}

const std::vector<Scenario>& builtin_registry() {
  static const std::vector<Scenario> registry =
      parse_registry(parse_json(detail::kScenarioRegistry, "data/scenarios.json"));
  return registry;
}

const Scenario* find_scenario(const std::vector<Scenario>& registry, const std::string& name) {
  for (const auto& s : registry)
    if (s.name == name) return &s;
  return nullptr;
}

ScenarioOutcome run_scenario(const Scenario& s, const Caps& caps) {
  ScenarioOutcome out;
  Json& report = out.report;
  report["scenario"] = s.name;
  report["description"] = s.description;
  report["analysis"] = s.analysis;
  report["provenance"] = s.provenance;
  report["exploratory"] = s.exploratory;

  auto q = std::make_shared<const Quantale>(quantale_from_json(s.quantale));
  report["quantale"] = q->name();
  const std::string expected_error = s.expect.value("error", "");
  try {
    run_analysis(s, q, caps, report);
  } catch (const Error& e) {
    if (expected_error.empty() || expected_error != to_string(e.kind())) throw;
    report["error"] = std::string(to_string(e.kind()));
    report["error_message"] = e.what();
  }

  for (auto it = s.expect.begin(); it != s.expect.end(); ++it) {
    const std::string& key = it.key();
    if (key == "irreducible" || key == "not_point_closure") continue;
    if (!report.contains(key)) {
      out.mismatches.push_back(key + ": expected " + it.value().dump() + ", not computed");
    } else if (report[key] != it.value()) {
      out.mismatches.push_back(key + ": expected " + it.value().dump() + ", got " + report[key].dump());
    }
  }
  if (report.contains("irreducible_values")) expect_sets(s.expect, report, out.mismatches);
  report["expect"] = s.expect;
  report["passed"] = out.mismatches.empty();
  report["mismatches"] = out.mismatches;
  return out;
}

}  // namespace qsober
