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

#include "qsober/duality.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <utility>

#include "qsober/error.hpp"

namespace qsober {
namespace {

bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

void require_double_negation(const Quantale& q) {
  const auto dn = check_double_negation(q);
  if (!dn.holds) {
    throw Error(ErrorKind::kNoDoubleNegation, q.label(*dn.witness),
                "not not " + q.label(*dn.witness) + " = " + q.label(q.negate(q.negate(*dn.witness))),
                {*dn.witness});
  }
}

std::size_t lookup(const QTopology& tau, const FuzzySet& u) {
  const auto i = tau.index_of(u);
  if (!i) throw Error(ErrorKind::kLawViolation, "open-family", "open family is not closed under an operation");
  return *i;
}

// Index tables of the lattice operations on the open family.
struct OpenTables {
  std::size_t n = 0;
  std::vector<std::size_t> meets, joins, scales, constants;

  explicit OpenTables(const QTopology& tau) : n(tau.size()) {
    const Quantale& q = tau.quantale();
    const auto& fam = tau.open();
    meets.resize(n * n);
    joins.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        meets[i * n + j] = meets[j * n + i] = lookup(tau, meet(q, fam[i], fam[j]));
        joins[i * n + j] = joins[j * n + i] = lookup(tau, join(q, fam[i], fam[j]));
      }
    }
    scales.resize(q.size() * n);
    for (Element p : q.elements()) {
      for (std::size_t i = 0; i < n; ++i) scales[p * n + i] = lookup(tau, tensor_scale(q, p, fam[i]));
      constants.push_back(lookup(tau, constant(q, tau.point_count(), p)));
    }
  }
};

}  // namespace

CrispTopology CrispTopology::from_closed(std::size_t points, std::vector<Subset> closed) {
  if (points > 64) throw Error(ErrorKind::kMalformedInput, "points", "crisp spaces hold at most 64 points");
  CrispTopology t;
  t.points_ = points;
  std::sort(closed.begin(), closed.end());
  closed.erase(std::unique(closed.begin(), closed.end()), closed.end());
  t.closed_ = std::move(closed);
  for (Subset s : t.closed_) {
    if (!subset_of(s, t.full())) throw Error(ErrorKind::kMalformedInput, "closed_subsets", "unknown point");
  }
  if (!t.is_closed(0)) throw Error(ErrorKind::kLawViolation, "empty", "the empty set must be closed");
  if (!t.is_closed(t.full())) throw Error(ErrorKind::kLawViolation, "whole", "X must be closed");
  for (Subset a : t.closed_) {
    for (Subset b : t.closed_) {
      if (!t.is_closed(a | b)) throw Error(ErrorKind::kLawViolation, "union", "not closed under union");
      if (!t.is_closed(a & b)) {
        throw Error(ErrorKind::kLawViolation, "intersection", "not closed under intersection");
      }
    }
  }
  return t;
}

CrispTopology CrispTopology::discrete(std::size_t points) {
  std::vector<Subset> all;
  for (Subset s = 0; s < (Subset{1} << points); ++s) all.push_back(s);
  return from_closed(points, std::move(all));
}

CrispTopology CrispTopology::indiscrete(std::size_t points) {
  CrispTopology t;
  t.points_ = points;
  return from_closed(points, {0, t.full()});
}

bool CrispTopology::is_closed(Subset s) const {
  return std::binary_search(closed_.begin(), closed_.end(), s);
}

Subset CrispTopology::closure(Subset s) const {
  Subset acc = full();
  for (Subset c : closed_) {
    if (subset_of(s, c)) acc &= c;
  }
  return acc;
}

std::vector<CrispTopology> all_crisp_topologies(std::size_t points) {
  if (points > 4) throw Error(ErrorKind::kCapExceeded, "crisp", "topology enumeration supports <= 4 points");
  const Subset full = (Subset{1} << points) - 1;
  std::vector<Subset> middle;
  for (Subset s = 1; s < full; ++s) middle.push_back(s);
  std::vector<CrispTopology> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << middle.size()); ++pick) {
    std::vector<Subset> fam{0, full};
    for (std::size_t i = 0; i < middle.size(); ++i) {
      if ((pick >> i) & 1u) fam.push_back(middle[i]);
    }
    bool ok = true;
    for (Subset a : fam) {
      for (Subset b : fam) {
        ok = ok && std::find(fam.begin(), fam.end(), a | b) != fam.end() &&
             std::find(fam.begin(), fam.end(), a & b) != fam.end();
      }
    }
    if (ok) out.push_back(CrispTopology::from_closed(points, std::move(fam)));
  }
  return out;
}

std::vector<Subset> irreducible_closed_subsets(const CrispTopology& x) {
  std::vector<Subset> out;
  for (Subset k : x.closed()) {
    if (k == 0) continue;
    bool irr = true;
    for (Subset a : x.closed()) {
      for (Subset b : x.closed()) {
        if (subset_of(k, a | b) && !subset_of(k, a) && !subset_of(k, b)) irr = false;
      }
    }
    if (irr) out.push_back(k);
  }
  return out;
}

bool is_crisp_sober(const CrispTopology& x) {
  for (Subset k : irreducible_closed_subsets(x)) {
    std::size_t hits = 0;
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (x.closure(Subset{1} << p) == k) ++hits;
    }
    if (hits != 1) return false;
  }
  return true;
}

Cotopology lowen(std::shared_ptr<const Quantale> q, const PointSet& points, const CrispTopology& x,
                 const Caps& caps) {
  if (points.size() != x.size()) throw Error(ErrorKind::kSpaceMismatch, "lowen", "size mismatch");
  if (!has_enough_coprimes(*q)) {
    throw Error(ErrorKind::kNotEnoughCoprimes, q->name(), "lowen needs a quantale with enough coprimes");
  }
  const auto cps = coprimes(*q);
  std::vector<FuzzySet> family;
  for_each_fuzzy_set(*q, points.size(), caps.enumeration, [&](const FuzzySet& lambda) {
    for (Element p : cps) {
      Subset level = 0;
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (q->leq(p, lambda[i])) level |= Subset{1} << i;
      }
      if (!x.is_closed(level)) return;
    }
    family.push_back(lambda);
  });
  return Cotopology::from_family(std::move(q), points, std::move(family), Mode::kStratified);
}

GoodExtensionCheck good_extension_check(std::shared_ptr<const Quantale> q, const PointSet& points,
                                        const CrispTopology& x, const Caps& caps) {
  if (!is_linear(*q)) {
    throw Error(ErrorKind::kNonLinearQuantale, q->name(),
                "good extension is only claimed for linearly ordered quantales; the boolean4 "
                "discrete two-point space is a counterexample");
  }
  GoodExtensionCheck out;
  out.crisp_sober = is_crisp_sober(x);
  out.fuzzy = is_sober(lowen(std::move(q), points, x, caps));
  out.agrees = out.crisp_sober == (out.fuzzy.verdict == Verdict::kSober);
  return out;
}

std::string_view to_string(OpenMode mode) {
  return mode == OpenMode::kStratified ? "stratified" : "weak";
}

OpenAxioms check_open_axioms(const Quantale& q, std::size_t points, const std::vector<FuzzySet>& family) {
  auto in = [&](const FuzzySet& a) { return std::binary_search(family.begin(), family.end(), a); };
  OpenAxioms ax;
  ax.constants = true;
  for (Element p : q.elements()) ax.constants = ax.constants && in(constant(q, points, p));
  ax.meets = ax.joins = ax.stratified = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size() && (ax.meets || ax.joins); ++j) {
      if (ax.meets && !in(meet(q, family[i], family[j]))) ax.meets = false;
      if (ax.joins && !in(join(q, family[i], family[j]))) ax.joins = false;
    }
    for (Element p : q.elements()) {
      if (ax.stratified && !in(tensor_scale(q, p, family[i]))) ax.stratified = false;
    }
  }
  return ax;
}

QTopology QTopology::from_family(std::shared_ptr<const Quantale> q, PointSet points,
                                 std::vector<FuzzySet> family, OpenMode mode) {
  for (const auto& u : family) {
    if (u.size() != points.size()) throw Error(ErrorKind::kSpaceMismatch, "topology", "size mismatch");
  }
  canonicalize(family);
  const OpenAxioms ax = check_open_axioms(*q, points.size(), family);
  if (!ax.constants) throw Error(ErrorKind::kLawViolation, "O1", "a constant is missing");
  if (!ax.meets) throw Error(ErrorKind::kLawViolation, "O2", "not closed under binary meets");
  if (!ax.joins) throw Error(ErrorKind::kLawViolation, "O3", "not closed under joins");
  if (mode == OpenMode::kStratified && !ax.stratified) {
    throw Error(ErrorKind::kLawViolation, "O4", "not closed under p & (-)");
  }
  QTopology t;
  t.quantale_ = std::move(q);
  t.points_ = std::move(points);
  t.open_ = std::move(family);
  t.mode_ = mode;
  t.axioms_ = ax;
  return t;
}

std::optional<std::size_t> QTopology::index_of(const FuzzySet& u) const {
  auto it = std::lower_bound(open_.begin(), open_.end(), u);
  if (it == open_.end() || *it != u) return std::nullopt;
  return static_cast<std::size_t>(it - open_.begin());
}

QTopology negate_topology(const Cotopology& tau) {
  const Quantale& q = tau.quantale();
  require_double_negation(q);
  std::vector<FuzzySet> family;
  for (const auto& a : tau.closed()) family.push_back(negate(q, a));
  return QTopology::from_family(tau.quantale_ptr(), tau.points(), std::move(family),
                                tau.is_stratified() ? OpenMode::kStratified : OpenMode::kWeak);
}

Cotopology negate_topology(const QTopology& tau) {
  const Quantale& q = tau.quantale();
  require_double_negation(q);
  std::vector<FuzzySet> family;
  for (const auto& u : tau.open()) family.push_back(negate(q, u));
  return Cotopology::from_family(tau.quantale_ptr(), tau.points(), std::move(family),
                                 tau.axioms().stratified ? Mode::kStratified : Mode::kPlain);
}

FrCheck check_fr_axioms(const QTopology& tau, const FrMap& g) {
  if (g.size() != tau.size()) throw Error(ErrorKind::kSpaceMismatch, "fr-map", "assignment size mismatch");
  const Quantale& q = tau.quantale();
  const OpenTables t(tau);
  const std::size_t n = t.n;
  FrCheck c;
  for (Element p : q.elements()) c.fr1 = c.fr1 && g[t.constants[p]] == p;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) c.fr2 = c.fr2 && g[t.meets[i * n + j]] == q.meet(g[i], g[j]);
  }
  // Joins of every subfamily of size <= 3, the whole family, and the empty family.
  for (std::size_t i = 0; i < n && c.fr3; ++i) {
    for (std::size_t j = i + 1; j < n && c.fr3; ++j) {
      const std::size_t ij = t.joins[i * n + j];
      if (g[ij] != q.join(g[i], g[j])) c.fr3 = false;
      for (std::size_t k = j + 1; k < n && c.fr3; ++k) {
        if (g[t.joins[ij * n + k]] != q.join(q.join(g[i], g[j]), g[k])) c.fr3 = false;
      }
    }
  }
  if (n > 0) {
    std::size_t all = 0;
    for (std::size_t i = 1; i < n; ++i) all = t.joins[all * n + i];
    c.fr3 = c.fr3 && g[all] == q.join_all(g);
  }
  c.fr3 = c.fr3 && g[t.constants[q.bottom()]] == q.bottom();
  for (Element p : q.elements()) {
    for (std::size_t i = 0; i < n; ++i) c.fr4 = c.fr4 && g[t.scales[p * n + i]] == q.tensor(p, g[i]);
  }
  return c;
}

FrMap fr_map_of_irreducible(const QTopology& tau, const FuzzySet& f) {
  const Quantale& q = tau.quantale();
  if (f.size() != tau.point_count()) throw Error(ErrorKind::kSpaceMismatch, "fr-map", "size mismatch");
  FrMap g;
  g.reserve(tau.size());
  for (const auto& u : tau.open()) {
    Element acc = q.bottom();
    for (std::size_t x = 0; x < f.size(); ++x) acc = q.join(acc, q.tensor(f[x], u[x]));
    g.push_back(acc);
  }
  return g;
}

FuzzySet irreducible_of_fr_map(const QTopology& tau, const FrMap& g) {
  const Quantale& q = tau.quantale();
  FuzzySet acc = constant(q, tau.point_count(), q.top());
  for (std::size_t i = 0; i < tau.size(); ++i) {
    // Closed sets of not(tau) are not U; their negation is U again.
    if (g[i] == q.bottom()) acc = meet(q, acc, negate(q, tau.open()[i]));
  }
  return acc;
}

FrMap point_evaluation(const QTopology& tau, std::size_t x) {
  FrMap g;
  g.reserve(tau.size());
  for (const auto& u : tau.open()) g.push_back(u[x]);
  return g;
}

std::vector<FrMap> fr_points(const QTopology& tau) {
  require_double_negation(tau.quantale());
  if (!tau.axioms().stratified) {
    throw Error(ErrorKind::kNotStratified, "fr-points", "topology is not stratified");
  }
  const Cotopology closed = negate_topology(tau);
  std::vector<FrMap> out;
  for (const auto& f : irreducible_closed_sets(closed)) out.push_back(fr_map_of_irreducible(tau, f));
  return out;
}

std::vector<FrMap> fr_points_by_search(const QTopology& tau, const Caps& caps) {
  const Quantale& q = tau.quantale();
  const OpenTables t(tau);
  const std::size_t n = t.n;

  // Each constraint reads value[a] op value[b] == value[target]; for scale
  // constraints `a` is the scalar element itself.
  enum class Kind { kMeet, kJoin, kScale };
  struct Constraint {
    Kind kind;
    std::size_t a, b, target;
  };
  std::vector<Constraint> constraints;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      constraints.push_back({Kind::kMeet, i, j, t.meets[i * n + j]});
      constraints.push_back({Kind::kJoin, i, j, t.joins[i * n + j]});
    }
    for (Element p : q.elements()) constraints.push_back({Kind::kScale, p, i, t.scales[p * n + i]});
  }
  std::vector<std::vector<std::size_t>> touching(n);
  for (std::size_t c = 0; c < constraints.size(); ++c) {
    const auto& k = constraints[c];
    if (k.kind != Kind::kScale) touching[k.a].push_back(c);
    touching[k.b].push_back(c);
    if (k.target != k.b && (k.kind == Kind::kScale || k.target != k.a)) touching[k.target].push_back(c);
  }

  std::vector<Element> value(n, 0);
  std::vector<bool> assigned(n, false);
  for (Element p : q.elements()) {
    value[t.constants[p]] = p;
    assigned[t.constants[p]] = true;
  }
  auto holds = [&](const Constraint& k) {
    if (k.kind != Kind::kScale && !assigned[k.a]) return true;
    if (!assigned[k.b] || !assigned[k.target]) return true;
    switch (k.kind) {
      case Kind::kMeet: return value[k.target] == q.meet(value[k.a], value[k.b]);
      case Kind::kJoin: return value[k.target] == q.join(value[k.a], value[k.b]);
      case Kind::kScale: return value[k.target] == q.tensor(static_cast<Element>(k.a), value[k.b]);
    }
    return true;
  };
  for (const auto& k : constraints) {
    if (!holds(k)) return {};
  }

  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (!assigned[i]) order.push_back(i);
  }
  std::vector<FrMap> out;
  std::size_t nodes = 0;
  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (depth == order.size()) {
      out.push_back(value);
      return;
    }
    const std::size_t i = order[depth];
    assigned[i] = true;
    for (Element v : q.elements()) {
      if (++nodes > caps.enumeration) {
        throw Error(ErrorKind::kCapExceeded, "enumeration",
                    "FrMap search exceeded " + std::to_string(caps.enumeration) + " nodes");
      }
      value[i] = v;
      bool ok = true;
      for (std::size_t c : touching[i]) {
        if (!holds(constraints[c])) {
          ok = false;
          break;
        }
      }
      if (ok) search(depth + 1);
    }
    assigned[i] = false;
  };
  search(0);
  std::sort(out.begin(), out.end());
  return out;
}

TopologicalSobriety is_sober_topological(const QTopology& tau, const Caps& caps) {
  require_double_negation(tau.quantale());
  if (!tau.axioms().stratified) {
    throw Error(ErrorKind::kNotStratified, "sober-topological", "topology is not stratified");
  }
  TopologicalSobriety out;
  std::vector<FrMap> maps;
  try {
    maps = fr_points_by_search(tau, caps);
    out.used_search = true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kCapExceeded) throw;
    maps = fr_points(tau);
  }
  std::vector<FrMap> evaluations;
  for (std::size_t x = 0; x < tau.point_count(); ++x) evaluations.push_back(point_evaluation(tau, x));
  out.fr_maps = maps.size();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto hits = std::count(evaluations.begin(), evaluations.end(), maps[i]);
    if (hits != 1) out.failures.push_back(i);
  }
  out.sober = out.failures.empty();
  return out;
}

}  // namespace qsober
