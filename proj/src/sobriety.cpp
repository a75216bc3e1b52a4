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

#include "qsober/sobriety.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <utility>

#include "qsober/error.hpp"
#include "qsober/qorder.hpp"

namespace qsober {
namespace {

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    out *= base;
  }
  return out;
}

// Join table of the closed family, by index.
std::vector<std::size_t> join_indices(const Cotopology& tau) {
  const auto& fam = tau.closed();
  const std::size_t n = fam.size();
  std::vector<std::size_t> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto k = tau.index_of(join(tau.quantale(), fam[i], fam[j]));
      if (!k) throw Error(ErrorKind::kLawViolation, "C2", "closed family is not closed under joins");
      out[i * n + j] = out[j * n + i] = *k;
    }
  }
  return out;
}

bool irreducible_with(const Cotopology& tau, const std::vector<std::size_t>& joins, const FuzzySet& f) {
  const Quantale& q = tau.quantale();
  if (height(q, f) != q.top()) return false;
  const auto& fam = tau.closed();
  const std::size_t n = fam.size();
  std::vector<Element> row(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = sub(q, f, fam[i]);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (row[joins[i * n + j]] != q.join(row[i], row[j])) return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kSober: return "sober";
    case Verdict::kNotStratified: return "not_stratified";
    case Verdict::kNotSober: return "not_sober";
  }
  return "not_sober";
}

bool is_irreducible_closed(const Cotopology& tau, const FuzzySet& f) {
  if (!tau.contains(f)) {
    throw Error(ErrorKind::kNotClosed, format(tau.quantale(), f), "fuzzy set is not closed");
  }
  return irreducible_with(tau, join_indices(tau), f);
}

std::vector<FuzzySet> irreducible_closed_sets(const Cotopology& tau) {
  const auto joins = join_indices(tau);
  std::vector<FuzzySet> out;
  for (const auto& f : tau.closed()) {
    if (irreducible_with(tau, joins, f)) out.push_back(f);
  }
  return out;
}

FuzzySet lift_closed(const Quantale& q, const std::vector<FuzzySet>& irreducibles, const FuzzySet& a) {
  FuzzySet out{std::vector<Element>(irreducibles.size())};
  for (std::size_t i = 0; i < irreducibles.size(); ++i) out[i] = sub(q, irreducibles[i], a);
  return out;
}

Sobrification sobrify(const Cotopology& tau) {
  if (!tau.is_stratified()) {
    throw Error(ErrorKind::kNotStratified, "sobrify", "sobrification needs a stratified space");
  }
  const Quantale& q = tau.quantale();
  auto irr = irreducible_closed_sets(tau);
  std::vector<std::string> names;
  names.reserve(irr.size());
  for (const auto& f : irr) names.push_back(format(q, f));

  std::vector<FuzzySet> family;
  family.reserve(tau.size());
  for (const auto& a : tau.closed()) family.push_back(lift_closed(q, irr, a));
  if (std::set<FuzzySet>(family.begin(), family.end()).size() != family.size()) {
    throw Error(ErrorKind::kLawViolation, "s-injective", "two closed sets share a lift");
  }

  PointMap eta;
  eta.target_size = irr.size();
  for (std::size_t x = 0; x < tau.point_count(); ++x) {
    const FuzzySet c = closure(tau, point_indicator(q, tau.point_count(), x));
    auto it = std::lower_bound(irr.begin(), irr.end(), c);
    if (it == irr.end() || *it != c) {
      throw Error(ErrorKind::kLawViolation, "point-closure", "closure of 1_x is not irreducible", {x});
    }
    eta.assignment.push_back(static_cast<std::size_t>(it - irr.begin()));
  }
  auto space = Cotopology::from_family(tau.quantale_ptr(), PointSet(std::move(names)),
                                       std::move(family), Mode::kStratified);
  return Sobrification{std::move(space), std::move(irr), std::move(eta)};
}

SoberReport is_sober(const Cotopology& tau) {
  SoberReport r;
  r.irreducibles = irreducible_closed_sets(tau);
  if (!tau.is_stratified()) {
    r.verdict = Verdict::kNotStratified;
    return r;
  }
  const Quantale& q = tau.quantale();
  std::vector<std::size_t> hits(r.irreducibles.size(), 0);
  for (std::size_t x = 0; x < tau.point_count(); ++x) {
    const FuzzySet c = closure(tau, point_indicator(q, tau.point_count(), x));
    auto it = std::lower_bound(r.irreducibles.begin(), r.irreducibles.end(), c);
    if (it == r.irreducibles.end() || *it != c) {
      throw Error(ErrorKind::kLawViolation, "point-closure", "closure of 1_x is not irreducible", {x});
    }
    const auto idx = static_cast<std::size_t>(it - r.irreducibles.begin());
    r.eta.push_back(idx);
    ++hits[idx];
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] != 1) r.witnesses.push_back(i);
  }
  r.verdict = r.witnesses.empty() ? Verdict::kSober : Verdict::kNotSober;
  return r;
}

Extension extend_to_sobrification(const PointMap& f, const Cotopology& source,
                                  const Cotopology& target, const Caps& caps) {
  if (!source.is_stratified()) {
    throw Error(ErrorKind::kSourceNotStratified, "extend", "source space is not stratified");
  }
  const SoberReport ty = is_sober(target);
  if (ty.verdict != Verdict::kSober) {
    throw Error(ErrorKind::kTargetNotSober, "extend", "target space is not sober");
  }
  if (!is_continuous(f, source, target).continuous) {
    throw Error(ErrorKind::kLawViolation, "continuity", "map is not continuous");
  }
  const Quantale& q = source.quantale();
  const Sobrification sx = sobrify(source);
  const std::size_t ny = target.point_count();

  // Each point y of the sober target is named by closure(1_y).
  std::vector<FuzzySet> point_closures;
  for (std::size_t y = 0; y < ny; ++y) point_closures.push_back(closure(target, point_indicator(q, ny, y)));

  Extension ext;
  ext.map.target_size = ny;
  for (const auto& F : sx.irreducibles) {
    const FuzzySet img = closure(target, image(q, f, F));
    std::optional<std::size_t> hit;
    for (std::size_t y = 0; y < ny; ++y) {
      if (point_closures[y] == img) {
        if (hit) throw Error(ErrorKind::kTargetNotSober, "extend", "closure shared by two points");
        hit = y;
      }
    }
    if (!hit) throw Error(ErrorKind::kTargetNotSober, "extend", "closure of an image is no point closure");
    ext.map.assignment.push_back(*hit);
  }

  auto factors = [&](const PointMap& g) {
    for (std::size_t x = 0; x < f.source_size(); ++x) {
      if (g(sx.eta(x)) != f(x)) return false;
    }
    return true;
  };
  ext.continuous = is_continuous(ext.map, sx.space, target).continuous;
  ext.factors_through_eta = factors(ext.map);

  const bool small = saturating_pow(ny, sx.irreducibles.size()) <= caps.maps;
  if (small) {
    std::size_t solutions = 0;
    PointMap g;
    g.target_size = ny;
    g.assignment.assign(sx.irreducibles.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == g.assignment.size()) {
        if (factors(g) && is_continuous(g, sx.space, target).continuous) ++solutions;
        return;
      }
      for (std::size_t y = 0; y < ny; ++y) {
        g.assignment[i] = y;
        rec(i + 1);
      }
    };
    rec(0);
    ext.solutions_enumerated = solutions;
  }
  return ext;
}

DirectedCompleteness check_directed_complete(const Cotopology& tau, const Caps& caps) {
  DirectedCompleteness out;
  out.sober = is_sober(tau).verdict == Verdict::kSober;
  const Quantale& q = tau.quantale();
  const QOrder omega = specialization(tau);
  const Cotopology gamma = alexandroff(tau.quantale_ptr(), tau.points(), omega, caps);
  for (const auto& phi : irreducible_closed_sets(gamma)) {
    ++out.irreducible_lower_sets;
    if (suprema(q, omega, phi).empty()) out.violations.push_back(phi);
  }
  return out;
}

HausdorffSoberCheck hausdorff_implies_sober_check(const Cotopology& tau, const Caps& caps) {
  if (!is_linear(tau.quantale())) {
    throw Error(ErrorKind::kNonLinearQuantale, tau.quantale().name(),
                "the implication is only claimed for linearly ordered quantales; see the "
                "boolean4 discrete two-point space for a counterexample");
  }
  if (!tau.is_stratified()) {
    throw Error(ErrorKind::kNotStratified, "hausdorff", "space is not stratified");
  }
  HausdorffSoberCheck out;
  out.hausdorff = is_hausdorff(tau, caps);
  out.sober = is_sober(tau);
  out.implication_holds = !out.hausdorff || out.sober.verdict == Verdict::kSober;
  return out;
}

}  // namespace qsober
