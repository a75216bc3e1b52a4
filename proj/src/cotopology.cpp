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

#include "qsober/cotopology.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "qsober/error.hpp"

namespace qsober {
namespace {

using FamilySet = std::unordered_set<FuzzySet, FuzzySetHash>;

Mode weaker(Mode a, Mode b) {
  const bool s = requires_stratified(a) && requires_stratified(b);
  const bool c = requires_costratified(a) && requires_costratified(b);
  if (s && c) return Mode::kStrong;
  if (s) return Mode::kStratified;
  if (c) return Mode::kCostratified;
  return Mode::kPlain;
}

bool lattice_is_distributive(const Quantale& q) {
  for (Element a : q.elements()) {
    for (Element b : q.elements()) {
      for (Element c : q.elements()) {
        if (q.meet(a, q.join(b, c)) != q.join(q.meet(a, b), q.meet(a, c))) return false;
      }
    }
  }
  return true;
}

bool residual_preserves_joins(const Quantale& q) {
  for (Element p : q.elements()) {
    for (Element a : q.elements()) {
      for (Element b : q.elements()) {
        if (q.implies(p, q.join(a, b)) != q.join(q.implies(p, a), q.implies(p, b))) return false;
      }
    }
  }
  return true;
}

bool tensor_preserves_meets(const Quantale& q) {
  for (Element p : q.elements()) {
    for (Element a : q.elements()) {
      for (Element b : q.elements()) {
        if (q.tensor(p, q.meet(a, b)) != q.meet(q.tensor(p, a), q.tensor(p, b))) return false;
      }
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kPlain: return "plain";
    case Mode::kStratified: return "stratified";
    case Mode::kCostratified: return "costratified";
    case Mode::kStrong: return "strong";
  }
  return "plain";
}

std::optional<Mode> parse_mode(std::string_view name) {
  for (auto m : {Mode::kPlain, Mode::kStratified, Mode::kCostratified, Mode::kStrong}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

bool requires_stratified(Mode mode) { return mode == Mode::kStratified || mode == Mode::kStrong; }
bool requires_costratified(Mode mode) { return mode == Mode::kCostratified || mode == Mode::kStrong; }

Mode Axioms::strongest_mode() const {
  if (stratified && costratified) return Mode::kStrong;
  if (stratified) return Mode::kStratified;
  if (costratified) return Mode::kCostratified;
  return Mode::kPlain;
}

Axioms check_axioms(const Quantale& q, std::size_t points, const std::vector<FuzzySet>& family) {
  const FamilySet members(family.begin(), family.end());
  auto in = [&](const FuzzySet& a) { return members.count(a) != 0; };
  Axioms ax;
  const auto elems = q.elements();
  ax.constants = std::all_of(elems.begin(), elems.end(), [&](Element p) { return in(constant(q, points, p)); });
  ax.joins = ax.meets = ax.stratified = ax.costratified = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size() && (ax.joins || ax.meets); ++j) {
      if (ax.joins && !in(join(q, family[i], family[j]))) ax.joins = false;
      if (ax.meets && !in(meet(q, family[i], family[j]))) ax.meets = false;
    }
    for (Element p : q.elements()) {
      if (ax.stratified && !in(residual_scale(q, p, family[i]))) ax.stratified = false;
      if (ax.costratified && !in(tensor_scale(q, p, family[i]))) ax.costratified = false;
    }
  }
  return ax;
}

Cotopology Cotopology::from_family(std::shared_ptr<const Quantale> q, PointSet points,
                                   std::vector<FuzzySet> family, Mode mode) {
  for (const auto& a : family) {
    if (a.size() != points.size()) {
      throw Error(ErrorKind::kSpaceMismatch, "cotopology", "closed set does not live on the points");
    }
    for (Element e : a.values) {
      if (e >= q->size()) throw Error(ErrorKind::kMalformedInput, "cotopology", "value out of range");
    }
  }
  canonicalize(family);
  const Axioms ax = check_axioms(*q, points.size(), family);
  if (!ax.constants) throw Error(ErrorKind::kLawViolation, "C1", "a constant is missing");
  if (!ax.joins) throw Error(ErrorKind::kLawViolation, "C2", "not closed under binary joins");
  if (!ax.meets) throw Error(ErrorKind::kLawViolation, "C3", "not closed under binary meets");
  if (requires_stratified(mode) && !ax.stratified) {
    throw Error(ErrorKind::kLawViolation, "C4", "not closed under p -> (-)");
  }
  if (requires_costratified(mode) && !ax.costratified) {
    throw Error(ErrorKind::kLawViolation, "C5", "not closed under p & (-)");
  }
  Cotopology t;
  t.quantale_ = std::move(q);
  t.points_ = std::move(points);
  t.closed_ = std::move(family);
  t.mode_ = mode;
  t.axioms_ = ax;
  return t;
}

Cotopology Cotopology::discrete(std::shared_ptr<const Quantale> q, PointSet points, const Caps& caps) {
  auto family = enumerate_fuzzy_sets(*q, points.size(), caps.enumeration);
  return from_family(std::move(q), std::move(points), std::move(family), Mode::kStrong);
}

Cotopology Cotopology::indiscrete(std::shared_ptr<const Quantale> q, PointSet points) {
  std::vector<FuzzySet> family;
  for (Element p : q->elements()) family.push_back(constant(*q, points.size(), p));
  return from_family(std::move(q), std::move(points), std::move(family), Mode::kStrong);
}

bool Cotopology::contains(const FuzzySet& a) const { return index_of(a).has_value(); }

std::optional<std::size_t> Cotopology::index_of(const FuzzySet& a) const {
  auto it = std::lower_bound(closed_.begin(), closed_.end(), a);
  if (it == closed_.end() || *it != a) return std::nullopt;
  return static_cast<std::size_t>(it - closed_.begin());
}

Cotopology generate(std::shared_ptr<const Quantale> q, const PointSet& points,
                    const std::vector<FuzzySet>& subbasis, Mode mode, const Caps& caps) {
  const Quantale& Q = *q;
  const std::size_t n = points.size();
  std::vector<FuzzySet> family;
  FamilySet seen;
  auto add = [&](FuzzySet a) {
    if (seen.count(a)) return;
    if (family.size() >= caps.cotopology) {
      throw Error(ErrorKind::kCapExceeded, "cotopology",
                  "generated family exceeds " + std::to_string(caps.cotopology) + " closed sets");
    }
    seen.insert(a);
    family.push_back(std::move(a));
  };
  for (Element p : Q.elements()) add(constant(Q, n, p));
  for (const auto& a : subbasis) {
    if (a.size() != n) throw Error(ErrorKind::kSpaceMismatch, "subbasis", "subbasis member size mismatch");
    add(a);
  }
  const bool strat = requires_stratified(mode);
  const bool costrat = requires_costratified(mode);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const FuzzySet a = family[i];
    for (std::size_t j = 0; j < i; ++j) {
      FuzzySet jn = join(Q, a, family[j]);
      FuzzySet mt = meet(Q, a, family[j]);
      add(std::move(jn));
      add(std::move(mt));
    }
    for (Element p : Q.elements()) {
      if (strat) add(residual_scale(Q, p, a));
      if (costrat) add(tensor_scale(Q, p, a));
    }
  }
  return Cotopology::from_family(std::move(q), points, std::move(family), mode);
}

FuzzySet closure(const Cotopology& tau, const FuzzySet& a) {
  const Quantale& q = tau.quantale();
  if (a.size() != tau.point_count()) throw Error(ErrorKind::kSpaceMismatch, "closure", "size mismatch");
  FuzzySet acc = constant(q, a.size(), q.top());
  for (const auto& b : tau.closed()) {
    if (leq(q, a, b)) acc = meet(q, acc, b);
  }
  return acc;
}

FuzzySet closure_by_inclusion(const Cotopology& tau, const FuzzySet& a) {
  const Quantale& q = tau.quantale();
  if (a.size() != tau.point_count()) throw Error(ErrorKind::kSpaceMismatch, "closure", "size mismatch");
  FuzzySet acc = constant(q, a.size(), q.top());
  for (const auto& b : tau.closed()) acc = meet(q, acc, residual_scale(q, sub(q, a, b), b));
  return acc;
}

ContinuityCheck is_continuous(const PointMap& f, const Cotopology& source, const Cotopology& target) {
  if (f.source_size() != source.point_count() || f.target_size != target.point_count()) {
    throw Error(ErrorKind::kSpaceMismatch, "continuity", "map does not match the spaces");
  }
  for (const auto& b : target.closed()) {
    if (!source.contains(preimage(source.quantale(), f, b))) return {false, b};
  }
  return {};
}

QOrder specialization(const Cotopology& tau) {
  const Quantale& q = tau.quantale();
  const std::size_t n = tau.point_count();
  std::vector<Element> t(n * n, q.top());
  for (const auto& a : tau.closed()) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) t[x * n + y] = q.meet(t[x * n + y], q.implies(a[y], a[x]));
    }
  }
  return QOrder::validate(q, n, std::move(t));
}

Cotopology product(const Cotopology& left, const Cotopology& right, const Caps& caps) {
  if (left.quantale_ptr() != right.quantale_ptr() &&
      left.quantale().labels() != right.quantale().labels()) {
    throw Error(ErrorKind::kSpaceMismatch, "product", "factors use different quantales");
  }
  const std::size_t nx = left.point_count(), ny = right.point_count();
  std::vector<std::string> names;
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      names.push_back("(" + left.points().name(x) + "," + right.points().name(y) + ")");
    }
  }
  std::vector<FuzzySet> subbasis;
  for (const auto& a : left.closed()) {
    FuzzySet c{std::vector<Element>(nx * ny)};
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y) c[x * ny + y] = a[x];
    subbasis.push_back(std::move(c));
  }
  for (const auto& b : right.closed()) {
    FuzzySet c{std::vector<Element>(nx * ny)};
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y) c[x * ny + y] = b[y];
    subbasis.push_back(std::move(c));
  }
  canonicalize(subbasis);
  return generate(left.quantale_ptr(), PointSet(std::move(names)), subbasis,
                  weaker(left.mode(), right.mode()), caps);
}

FuzzySet diagonal(const Quantale& q, std::size_t points) {
  FuzzySet d{std::vector<Element>(points * points, q.bottom())};
  for (std::size_t x = 0; x < points; ++x) d[x * points + x] = q.top();
  return d;
}

bool cylinder_description_applies(const Cotopology& tau) {
  const Quantale& q = tau.quantale();
  if (!lattice_is_distributive(q)) return false;
  // p & (A(x) v B(y)) is again a cylinder join; the family stays closed
  // under p & as long as p & (-) also commutes with the meets.
  if (requires_costratified(tau.mode()) && !tensor_preserves_meets(q)) return false;
  return !requires_stratified(tau.mode()) || residual_preserves_joins(q);
}

FuzzySet diagonal_closure_by_cylinders(const Cotopology& tau) {
  const Quantale& q = tau.quantale();
  const std::size_t n = tau.point_count();
  FuzzySet acc = constant(q, n * n, q.top());
  const auto& fam = tau.closed();
  for (const auto& a : fam) {
    for (const auto& b : fam) {
      bool covers = true;
      for (std::size_t z = 0; z < n && covers; ++z) covers = q.join(a[z], b[z]) == q.top();
      if (!covers) continue;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          acc[x * n + y] = q.meet(acc[x * n + y], q.join(a[x], b[y]));
    }
  }
  return acc;
}

bool is_hausdorff(const Cotopology& tau, const Caps& caps) {
  const FuzzySet delta = diagonal(tau.quantale(), tau.point_count());
  if (cylinder_description_applies(tau)) return diagonal_closure_by_cylinders(tau) == delta;
  return product(tau, tau, caps).contains(delta);
}

}  // namespace qsober
