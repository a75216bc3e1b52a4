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

#ifndef QSOBER_TESTS_ORACLES_HPP
#define QSOBER_TESTS_ORACLES_HPP

// Brute-force reference implementations. They use only the order and tensor
// tables of a quantale (never its derived join/meet/residuation tables) and
// follow the textbook definitions as literally as possible, so agreement with
// the library is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "qsober/cotopology.hpp"
#include "qsober/duality.hpp"
#include "qsober/quantale.hpp"

namespace oracle {

using qsober::Element;
using qsober::FuzzySet;
using qsober::Quantale;

inline Element join_of(const Quantale& q, const std::vector<Element>& xs) {
  for (Element c = 0; c < q.size(); ++c) {
    bool upper = std::all_of(xs.begin(), xs.end(), [&](Element x) { return q.leq(x, c); });
    if (!upper) continue;
    bool least = true;
    for (Element d = 0; d < q.size() && least; ++d) {
      bool d_upper = std::all_of(xs.begin(), xs.end(), [&](Element x) { return q.leq(x, d); });
      if (d_upper && !q.leq(c, d)) least = false;
    }
    if (least) return c;
  }
  return q.size();  // unreachable for a lattice
}

inline Element meet_of(const Quantale& q, const std::vector<Element>& xs) {
  for (Element c = 0; c < q.size(); ++c) {
    bool lower = std::all_of(xs.begin(), xs.end(), [&](Element x) { return q.leq(c, x); });
    if (!lower) continue;
    bool greatest = true;
    for (Element d = 0; d < q.size() && greatest; ++d) {
      bool d_lower = std::all_of(xs.begin(), xs.end(), [&](Element x) { return q.leq(d, x); });
      if (d_lower && !q.leq(d, c)) greatest = false;
    }
    if (greatest) return c;
  }
  return q.size();
}

inline Element join2(const Quantale& q, Element a, Element b) { return join_of(q, {a, b}); }
inline Element meet2(const Quantale& q, Element a, Element b) { return meet_of(q, {a, b}); }

/// join { x : p & x <= r }
inline Element residual(const Quantale& q, Element p, Element r) {
  std::vector<Element> xs;
  for (Element x = 0; x < q.size(); ++x)
    if (q.leq(q.tensor(p, x), r)) xs.push_back(x);
  return join_of(q, xs);
}

inline Element neg(const Quantale& q, Element p) { return residual(q, p, join_of(q, {})); }

inline Element sub(const Quantale& q, const FuzzySet& a, const FuzzySet& b) {
  std::vector<Element> xs;
  for (std::size_t x = 0; x < a.size(); ++x) xs.push_back(residual(q, a[x], b[x]));
  return meet_of(q, xs);
}

inline bool pointwise_leq(const Quantale& q, const FuzzySet& a, const FuzzySet& b) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!q.leq(a[x], b[x])) return false;
  return true;
}

inline FuzzySet map_values(const FuzzySet& a, const std::function<Element(Element)>& f) {
  FuzzySet out = a;
  for (auto& v : out.values) v = f(v);
  return out;
}

inline FuzzySet zip_values(const FuzzySet& a, const FuzzySet& b, const std::function<Element(Element, Element)>& f) {
  FuzzySet out = a;
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = f(a[x], b[x]);
  return out;
}

inline FuzzySet constant(const Quantale& q, std::size_t n, Element p) {
  (void)q;
  return FuzzySet{std::vector<Element>(n, p)};
}

/// Every element of Q^X, odometer order.
inline std::vector<FuzzySet> all_sets(const Quantale& q, std::size_t n) {
  std::vector<FuzzySet> out;
  std::vector<Element> v(n, 0);
  while (true) {
    out.push_back(FuzzySet{v});
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++v[i] < q.size()) break;
      v[i] = 0;
      if (i == 0) return out;
    }
    if (n == 0) return out;
  }
}

/// Naive fixpoint: apply every operation to every pair until nothing changes.
inline std::set<FuzzySet> generate(const Quantale& q, std::size_t n, const std::vector<FuzzySet>& subbasis,
                                   bool stratified, bool costratified) {
  std::set<FuzzySet> s(subbasis.begin(), subbasis.end());
  for (Element p = 0; p < q.size(); ++p) s.insert(oracle::constant(q, n, p));
  while (true) {
    std::set<FuzzySet> next = s;
    for (const auto& a : s) {
      for (const auto& b : s) {
        next.insert(zip_values(a, b, [&](Element x, Element y) { return join2(q, x, y); }));
        next.insert(zip_values(a, b, [&](Element x, Element y) { return meet2(q, x, y); }));
      }
      for (Element p = 0; p < q.size(); ++p) {
        if (stratified) next.insert(map_values(a, [&](Element x) { return residual(q, p, x); }));
        if (costratified) next.insert(map_values(a, [&](Element x) { return q.tensor(p, x); }));
      }
    }
    if (next.size() == s.size()) return s;
    s = std::move(next);
  }
}

/// The least member of `family` above A, found by comparing candidates.
inline FuzzySet closure(const Quantale& q, const std::vector<FuzzySet>& family, const FuzzySet& a) {
  std::vector<FuzzySet> above;
  for (const auto& c : family)
    if (pointwise_leq(q, a, c)) above.push_back(c);
  for (const auto& c : above) {
    bool least = std::all_of(above.begin(), above.end(), [&](const FuzzySet& d) { return pointwise_leq(q, c, d); });
    if (least) return c;
  }
  return FuzzySet{};
}

inline bool is_irreducible(const Quantale& q, const std::vector<FuzzySet>& family, const FuzzySet& f) {
  if (join_of(q, f.values) != q.top()) return false;
  for (const auto& a : family)
    for (const auto& b : family) {
      FuzzySet ab = zip_values(a, b, [&](Element x, Element y) { return join2(q, x, y); });
      if (oracle::sub(q, f, ab) != join2(q, oracle::sub(q, f, a), oracle::sub(q, f, b))) return false;
    }
  return true;
}

inline std::vector<FuzzySet> irreducibles(const Quantale& q, const std::vector<FuzzySet>& family) {
  std::vector<FuzzySet> out;
  for (const auto& f : family)
    if (is_irreducible(q, family, f)) out.push_back(f);
  return out;
}

/// R(x, y) & phi(y) <= phi(x) for all x, y.
inline bool is_lower(const Quantale& q, const std::vector<std::vector<Element>>& r, const FuzzySet& phi) {
  for (std::size_t x = 0; x < phi.size(); ++x)
    for (std::size_t y = 0; y < phi.size(); ++y)
      if (!q.leq(q.tensor(phi[y], r[x][y]), phi[x])) return false;
  return true;
}

/// Crisp irreducibles: nonempty closed K that is not a union of two closed
/// sets both strictly smaller than K.
inline std::vector<qsober::Subset> crisp_irreducibles(const qsober::CrispTopology& t) {
  std::vector<qsober::Subset> out;
  for (auto k : t.closed()) {
    if (k == 0) continue;
    bool split = false;
    for (auto a : t.closed())
      for (auto b : t.closed())
        if ((a | b) == k && a != k && b != k) split = true;
    if (!split) out.push_back(k);
  }
  return out;
}

/// Crisp closure of {x}: intersection of closed sets containing x.
inline qsober::Subset crisp_point_closure(const qsober::CrispTopology& t, std::size_t x) {
  qsober::Subset acc = t.full();
  for (auto c : t.closed())
    if (c >> x & 1) acc &= c;
  return acc;
}

inline bool crisp_sober(const qsober::CrispTopology& t) {
  for (auto k : crisp_irreducibles(t)) {
    int hits = 0;
    for (std::size_t x = 0; x < t.size(); ++x) hits += crisp_point_closure(t, x) == k;
    if (hits != 1) return false;
  }
  return true;
}

/// Upper semicontinuity with every level p (not just coprimes).
inline std::vector<FuzzySet> lowen_all_levels(const Quantale& q, const qsober::CrispTopology& t) {
  std::vector<FuzzySet> out;
  for (const auto& lam : all_sets(q, t.size())) {
    bool ok = true;
    for (Element p = 0; p < q.size() && ok; ++p) {
      qsober::Subset level = 0;
      for (std::size_t x = 0; x < t.size(); ++x)
        if (q.leq(p, lam[x])) level |= qsober::Subset{1} << x;
      ok = t.is_closed(level);
    }
    if (ok) out.push_back(lam);
  }
  return out;
}

/// Every assignment open set -> element satisfying Fr1-Fr4, with Fr3 checked
/// over the full power set of the open family. Only for tiny families.
inline std::vector<qsober::FrMap> fr_maps(const qsober::QTopology& tau) {
  const Quantale& q = tau.quantale();
  const auto& open = tau.open();
  const std::size_t m = open.size();
  const std::size_t n = tau.point_count();
  auto idx = [&](const FuzzySet& u) { return *tau.index_of(u); };
  std::vector<qsober::FrMap> out;
  qsober::FrMap g(m, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i < m) {
      for (Element v = 0; v < q.size(); ++v) {
        g[i] = v;
        rec(i + 1);
      }
      return;
    }
    for (Element p = 0; p < q.size(); ++p)
      if (g[idx(oracle::constant(q, n, p))] != p) return;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        FuzzySet ab = zip_values(open[a], open[b], [&](Element x, Element y) { return meet2(q, x, y); });
        if (g[idx(ab)] != meet2(q, g[a], g[b])) return;
      }
      for (Element p = 0; p < q.size(); ++p) {
        FuzzySet pu = map_values(open[a], [&](Element x) { return q.tensor(p, x); });
        if (g[idx(pu)] != q.tensor(p, g[a])) return;
      }
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      FuzzySet u = oracle::constant(q, n, join_of(q, {}));
      std::vector<Element> vals;
      for (std::size_t a = 0; a < m; ++a) {
        if (!(mask >> a & 1)) continue;
        u = zip_values(u, open[a], [&](Element x, Element y) { return join2(q, x, y); });
        vals.push_back(g[a]);
      }
      if (g[idx(u)] != join_of(q, vals)) return;
    }
    out.push_back(g);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle

#endif  // QSOBER_TESTS_ORACLES_HPP
