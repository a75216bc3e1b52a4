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

#ifndef QSOBER_SCENARIO_HPP
#define QSOBER_SCENARIO_HPP

// Named worked examples. Each registry entry carries a quantale, a space and
// the expected verdicts; run_scenario recomputes everything and lists every
// field whose value disagrees with the expectation.

#include <string>
#include <vector>

#include "qsober/io.hpp"

namespace qsober {

struct Scenario {
  std::string name;
  std::string description;
  std::string analysis;    // sober | lowen | good-extension | hausdorff-sober | chain-generation
  std::string provenance;  // where the expected values come from
  bool exploratory = false;
  Json quantale;
  Json space;
  Json expect;
};

/// Parses { "scenarios": [ ... ] }. Throws Error(kMalformedInput).
std::vector<Scenario> parse_registry(const Json& doc);
/// The registry compiled into the library.
const std::vector<Scenario>& builtin_registry();
const Scenario* find_scenario(const std::vector<Scenario>& registry, const std::string& name);

struct ScenarioOutcome {
  Json report;
  std::vector<std::string> mismatches;
  bool passed() const { return mismatches.empty(); }
};

/// Expected errors (expect.error = kind name) are caught and compared;
/// unexpected errors propagate.
ScenarioOutcome run_scenario(const Scenario& s, const Caps& caps);

}  // namespace qsober

#endif  // QSOBER_SCENARIO_HPP
