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

#include "qsober/io.hpp"

#include <fstream>
#include <sstream>

#include "qsober/error.hpp"

namespace qsober {
namespace {

[[noreturn]] void malformed(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::kMalformedInput, path.empty() ? "/" : path, what);
}

const Json& field(const Json& doc, const char* key, const std::string& path) {
  if (!doc.is_object()) malformed(path, "expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) malformed(path + "/" + key, "missing field");
  return *it;
}

const Json& array_at(const Json& doc, const std::string& path) {
  if (!doc.is_array()) malformed(path, "expected an array");
  return doc;
}

std::string string_at(const Json& doc, const std::string& path) {
  if (!doc.is_string()) malformed(path, "expected a string");
  return doc.get<std::string>();
}

std::size_t index_at(const Json& doc, const std::string& path) {
  if (!doc.is_number_unsigned() && !(doc.is_number_integer() && doc.get<long long>() >= 0))
    malformed(path, "expected a non-negative integer");
  return doc.get<std::size_t>();
}

Element label_at(const Quantale& q, const Json& doc, const std::string& path) {
  auto e = q.find(string_at(doc, path));
  if (!e) malformed(path, "unknown element label '" + doc.get<std::string>() + "'");
  return *e;
}

PointSet points_at(const Json& doc, const std::string& path) {
  std::vector<std::string> names;
  const Json& arr = array_at(field(doc, "points", path), path + "/points");
  for (std::size_t i = 0; i < arr.size(); ++i)
    names.push_back(string_at(arr[i], path + "/points/" + std::to_string(i)));
  try {
    return PointSet(std::move(names));
  } catch (const Error& e) {
    malformed(path + "/points", e.message());
  }
}

std::vector<std::vector<std::size_t>> index_matrix(const Json& doc, const std::string& path) {
  std::vector<std::vector<std::size_t>> out;
  array_at(doc, path);
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string row_path = path + "/" + std::to_string(i);
    array_at(doc[i], row_path);
    std::vector<std::size_t> row;
    for (std::size_t j = 0; j < doc[i].size(); ++j)
      row.push_back(index_at(doc[i][j], row_path + "/" + std::to_string(j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json element_table(const Quantale& q, Element (Quantale::*op)(Element, Element) const) {
  Json rows = Json::array();
  for (Element a = 0; a < q.size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < q.size(); ++b) row.push_back((q.*op)(a, b));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kMalformedInput, origin + ":byte " + std::to_string(e.byte),
                "invalid JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kMalformedInput, path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

Quantale quantale_from_json(const Json& doc) {
  if (!doc.is_object()) malformed("", "expected an object");
  if (doc.contains("standard")) {
    const std::string name = string_at(doc["standard"], "/standard");
    auto kind = parse_standard_kind(name);
    if (!kind) malformed("/standard", "unknown standard quantale '" + name + "'");
    std::size_t n = 0;
    if (*kind != StandardKind::kBoolean4) n = index_at(field(doc, "n", ""), "/n");
    return Quantale::standard(*kind, n);
  }
  std::vector<std::string> labels;
  const Json& ls = array_at(field(doc, "labels", ""), "/labels");
  for (std::size_t i = 0; i < ls.size(); ++i) labels.push_back(string_at(ls[i], "/labels/" + std::to_string(i)));
  auto leq_idx = index_matrix(field(doc, "leq", ""), "/leq");
  Quantale::BoolTable leq;
  for (std::size_t i = 0; i < leq_idx.size(); ++i) {
    std::vector<bool> row;
    for (std::size_t j = 0; j < leq_idx[i].size(); ++j) {
      if (leq_idx[i][j] > 1) malformed("/leq/" + std::to_string(i) + "/" + std::to_string(j), "expected 0 or 1");
      row.push_back(leq_idx[i][j] == 1);
    }
    leq.push_back(std::move(row));
  }
  auto tensor = index_matrix(field(doc, "tensor", ""), "/tensor");
  std::string name = doc.contains("name") ? string_at(doc["name"], "/name") : "custom";
  return Quantale::build(std::move(labels), leq, tensor, std::move(name));
}

Json quantale_to_json(const Quantale& q) {
  Json leq = Json::array();
  for (Element a = 0; a < q.size(); ++a) {
    Json row = Json::array();
    for (Element b = 0; b < q.size(); ++b) row.push_back(q.leq(a, b) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  Json out;
  out["name"] = q.name();
  out["labels"] = q.labels();
  out["bottom"] = q.label(q.bottom());
  out["top"] = q.label(q.top());
  out["leq"] = std::move(leq);
  out["tensor"] = element_table(q, &Quantale::tensor);
  out["join"] = element_table(q, &Quantale::join);
  out["meet"] = element_table(q, &Quantale::meet);
  out["residuation"] = element_table(q, &Quantale::implies);
  auto dn = check_double_negation(q);
  out["double_negation"] = dn.holds;
  Json cps = Json::array();
  for (Element c : coprimes(q)) cps.push_back(q.label(c));
  out["coprimes"] = std::move(cps);
  out["enough_coprimes"] = has_enough_coprimes(q);
  out["linear"] = is_linear(q);
  return out;
}

FuzzySet fuzzy_set_from_json(const Quantale& q, const Json& labels, std::size_t points,
                             const std::string& path) {
  array_at(labels, path);
  if (labels.size() != points)
    malformed(path, "expected " + std::to_string(points) + " values, got " + std::to_string(labels.size()));
  FuzzySet a{std::vector<Element>(points, q.bottom())};
  for (std::size_t x = 0; x < points; ++x) a[x] = label_at(q, labels[x], path + "/" + std::to_string(x));
  return a;
}

Json fuzzy_set_to_json(const Quantale& q, const FuzzySet& a) {
  Json out = Json::array();
  for (Element v : a.values) out.push_back(q.label(v));
  return out;
}

SpaceFile space_from_json(const Quantale& q, const Json& doc) {
  SpaceFile out;
  out.points = points_at(doc, "");
  if (doc.contains("fuzzy_sets")) {
    const Json& sets = doc["fuzzy_sets"];
    if (!sets.is_object()) malformed("/fuzzy_sets", "expected an object");
    for (auto it = sets.begin(); it != sets.end(); ++it)
      out.fuzzy_sets.emplace(it.key(), fuzzy_set_from_json(q, it.value(), out.points.size(),
                                                           "/fuzzy_sets/" + it.key()));
  }
  return out;
}

Cotopology cotopology_from_json(std::shared_ptr<const Quantale> q, const Json& doc, const Caps& caps) {
  if (!doc.is_object()) malformed("", "expected an object");
  Mode mode = Mode::kStratified;
  if (doc.contains("mode")) {
    const std::string m = string_at(doc["mode"], "/mode");
    auto parsed = parse_mode(m);
    if (!parsed) malformed("/mode", "unknown mode '" + m + "'");
    mode = *parsed;
  }
  if (doc.contains("preset")) {
    const std::string preset = string_at(doc["preset"], "/preset");
    if (preset == "carrier-identity") {
      FuzzySet id{q->elements()};
      return generate(q, PointSet(q->labels()), {id}, mode, caps);
    }
    PointSet points = points_at(doc, "");
    if (preset == "discrete") return Cotopology::discrete(q, std::move(points), caps);
    if (preset == "indiscrete") return Cotopology::indiscrete(q, std::move(points));
    malformed("/preset", "unknown preset '" + preset + "'");
  }
  PointSet points = points_at(doc, "");
  std::vector<FuzzySet> subbasis;
  if (doc.contains("subbasis")) {
    const Json& sb = array_at(doc["subbasis"], "/subbasis");
    for (std::size_t i = 0; i < sb.size(); ++i)
      subbasis.push_back(fuzzy_set_from_json(*q, sb[i], points.size(), "/subbasis/" + std::to_string(i)));
  }
  return generate(q, points, subbasis, mode, caps);
}

Json cotopology_to_json(const Cotopology& tau) {
  const Quantale& q = tau.quantale();
  Json closed = Json::array();
  for (std::size_t i = 0; i < tau.size(); ++i)
    closed.push_back({{"index", i}, {"values", fuzzy_set_to_json(q, tau.closed()[i])}});
  const Axioms& ax = tau.axioms();
  Json out;
  out["quantale"] = q.name();
  out["points"] = tau.points().names();
  out["mode"] = std::string(to_string(tau.mode()));
  out["axioms"] = {{"constants", ax.constants}, {"joins", ax.joins}, {"meets", ax.meets},
                   {"stratified", ax.stratified}, {"costratified", ax.costratified}};
  out["size"] = tau.size();
  out["closed"] = std::move(closed);
  return out;
}

Json topology_to_json(const QTopology& tau) {
  const Quantale& q = tau.quantale();
  Json open = Json::array();
  for (std::size_t i = 0; i < tau.size(); ++i)
    open.push_back({{"index", i}, {"values", fuzzy_set_to_json(q, tau.open()[i])}});
  Json out;
  out["quantale"] = q.name();
  out["points"] = tau.points().names();
  out["mode"] = std::string(to_string(tau.mode()));
  out["size"] = tau.size();
  out["open"] = std::move(open);
  return out;
}

std::pair<PointSet, QOrder> qorder_from_json(const Quantale& q, const Json& doc) {
  PointSet points = points_at(doc, "");
  const Json& rows = array_at(field(doc, "R", ""), "/R");
  if (rows.size() != points.size())
    malformed("/R", "expected " + std::to_string(points.size()) + " rows");
  std::vector<std::vector<Element>> table;
  for (std::size_t i = 0; i < rows.size(); ++i)
    table.push_back(fuzzy_set_from_json(q, rows[i], points.size(), "/R/" + std::to_string(i)).values);
  return {std::move(points), QOrder::validate(q, table)};
}

Json qorder_to_json(const Quantale& q, const PointSet& points, const QOrder& r) {
  Json rows = Json::array();
  for (std::size_t x = 0; x < r.size(); ++x) {
    Json row = Json::array();
    for (std::size_t y = 0; y < r.size(); ++y) row.push_back(q.label(r(x, y)));
    rows.push_back(std::move(row));
  }
  return {{"points", points.names()}, {"R", std::move(rows)}};
}

std::pair<PointSet, CrispTopology> crisp_from_json(const Json& doc) {
  PointSet points = points_at(doc, "");
  if (points.size() > 64) malformed("/points", "at most 64 points are supported");
  const Json& subsets = array_at(field(doc, "closed_subsets", ""), "/closed_subsets");
  std::vector<Subset> closed;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const std::string p = "/closed_subsets/" + std::to_string(i);
    array_at(subsets[i], p);
    Subset s = 0;
    for (std::size_t j = 0; j < subsets[i].size(); ++j) {
      const std::string name = string_at(subsets[i][j], p + "/" + std::to_string(j));
      auto x = points.find(name);
      if (!x) malformed(p + "/" + std::to_string(j), "unknown point '" + name + "'");
      s |= Subset{1} << *x;
    }
    closed.push_back(s);
  }
  return {points, CrispTopology::from_closed(points.size(), std::move(closed))};
}

Json crisp_to_json(const PointSet& points, const CrispTopology& x) {
  Json subsets = Json::array();
  for (Subset s : x.closed()) {
    Json names = Json::array();
    for (std::size_t i = 0; i < points.size(); ++i)
      if (s >> i & 1) names.push_back(points.name(i));
    subsets.push_back(std::move(names));
  }
  return {{"points", points.names()}, {"closed_subsets", std::move(subsets)}};
}

Json sober_report_to_json(const Cotopology& tau, const SoberReport& report) {
  const Quantale& q = tau.quantale();
  Json irr = Json::array();
  for (std::size_t i = 0; i < report.irreducibles.size(); ++i)
    irr.push_back({{"index", i}, {"values", fuzzy_set_to_json(q, report.irreducibles[i])}});
  Json eta = Json::object();
  for (std::size_t x = 0; x < report.eta.size(); ++x) eta[tau.points().name(x)] = report.eta[x];
  Json out;
  out["verdict"] = std::string(to_string(report.verdict));
  out["irreducibles"] = std::move(irr);
  out["eta"] = std::move(eta);
  out["witnesses"] = report.witnesses;
  return out;
}

}  // namespace qsober
