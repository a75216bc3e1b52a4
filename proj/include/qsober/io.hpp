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

#ifndef QSOBER_IO_HPP
#define QSOBER_IO_HPP

// Reading and writing the JSON document formats. Element values are always
// written as quantale labels; every parse failure throws
// Error(kMalformedInput) whose subject is the JSON path of the offending node.

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "json.hpp"
#include "qsober/cotopology.hpp"
#include "qsober/duality.hpp"
#include "qsober/qorder.hpp"
#include "qsober/quantale.hpp"
#include "qsober/sobriety.hpp"

namespace qsober {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);
Json parse_json(const std::string& text, const std::string& origin);

/// { "labels", "leq", "tensor" } or { "standard", "n" }.
Quantale quantale_from_json(const Json& doc);
/// The defining tables plus the derived join, meet and residuation tables.
Json quantale_to_json(const Quantale& q);

FuzzySet fuzzy_set_from_json(const Quantale& q, const Json& labels, std::size_t points,
                             const std::string& path);
Json fuzzy_set_to_json(const Quantale& q, const FuzzySet& a);

/// { "points": [...], "fuzzy_sets": { name: [label] } }
struct SpaceFile {
  PointSet points;
  std::map<std::string, FuzzySet> fuzzy_sets;
};
SpaceFile space_from_json(const Quantale& q, const Json& doc);

/// { "points", "subbasis", "mode" }. Also accepted: "preset" = "discrete" |
/// "indiscrete" | "carrier-identity" (points are the carrier, subbasis {id}).
Cotopology cotopology_from_json(std::shared_ptr<const Quantale> q, const Json& doc, const Caps& caps);
Json cotopology_to_json(const Cotopology& tau);
Json topology_to_json(const QTopology& tau);

/// { "points", "R": [[label]] }
std::pair<PointSet, QOrder> qorder_from_json(const Quantale& q, const Json& doc);
Json qorder_to_json(const Quantale& q, const PointSet& points, const QOrder& r);

/// { "points", "closed_subsets": [[point-name]] }
std::pair<PointSet, CrispTopology> crisp_from_json(const Json& doc);
Json crisp_to_json(const PointSet& points, const CrispTopology& x);

/// Stable fields: verdict, irreducibles, eta, witnesses.
Json sober_report_to_json(const Cotopology& tau, const SoberReport& report);

}  // namespace qsober

#endif  // QSOBER_IO_HPP
