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

#include "qsober/qorder.hpp"

#include <utility>

#include "qsober/cotopology.hpp"
#include "qsober/error.hpp"

namespace qsober {

QOrder QOrder::validate(const Quantale& q, std::size_t points, std::vector<Element> table) {
  if (table.size() != points * points) {
    throw Error(ErrorKind::kMalformedInput, "R", "table must be square over the points");
  }
  for (Element e : table) {
    if (e >= q.size()) throw Error(ErrorKind::kMalformedInput, "R", "entry is not a carrier element");
  }
  QOrder r(points, std::move(table));
  for (std::size_t x = 0; x < points; ++x) {
    if (r(x, x) != q.top()) {
      throw Error(ErrorKind::kNotReflexive, "R", "R(x,x) != 1", {x});
    }
  }
  for (std::size_t x = 0; x < points; ++x) {
    for (std::size_t y = 0; y < points; ++y) {
      for (std::size_t z = 0; z < points; ++z) {
        if (!q.leq(q.tensor(r(y, z), r(x, y)), r(x, z))) {
          throw Error(ErrorKind::kNotTransitive, "R", "R(y,z) & R(x,y) is not below R(x,z)",
                      {x, y, z});
        }
      }
    }
  }
  return r;
}

QOrder QOrder::validate(const Quantale& q, const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Element> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorKind::kMalformedInput, "R", "table must be square");
    table.insert(table.end(), row.begin(), row.end());
  }
  return validate(q, n, std::move(table));
}

QOrder QOrder::left_distance(const Quantale& q) {
  const std::size_t n = q.size();
  std::vector<Element> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = q.implies(Element(a), Element(b));
  }
  return validate(q, n, std::move(t));
}

QOrder QOrder::right_distance(const Quantale& q) { return left_distance(q).opposite(); }

QOrder QOrder::discrete(const Quantale& q, std::size_t points) {
  std::vector<Element> t(points * points, q.bottom());
  for (std::size_t x = 0; x < points; ++x) t[x * points + x] = q.top();
  return validate(q, points, std::move(t));
}

QOrder QOrder::opposite() const {
  std::vector<Element> t(table_.size());
  for (std::size_t x = 0; x < points_; ++x) {
    for (std::size_t y = 0; y < points_; ++y) t[x * points_ + y] = (*this)(y, x);
  }
  return QOrder(points_, std::move(t));
}

FuzzySet QOrder::representable(std::size_t a) const {
  FuzzySet out{std::vector<Element>(points_)};
  for (std::size_t x = 0; x < points_; ++x) out[x] = (*this)(x, a);
  return out;
}

PairCheck is_lower_set(const Quantale& q, const QOrder& r, const FuzzySet& phi) {
  if (phi.size() != r.size()) throw Error(ErrorKind::kSpaceMismatch, "lower-set", "size mismatch");
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      if (!q.leq(q.tensor(phi[y], r(x, y)), phi[x])) return {false, std::pair{x, y}};
    }
  }
  return {};
}

PairCheck is_upper_set(const Quantale& q, const QOrder& r, const FuzzySet& psi) {
  if (psi.size() != r.size()) throw Error(ErrorKind::kSpaceMismatch, "upper-set", "size mismatch");
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      if (!q.leq(q.tensor(r(x, y), psi[x]), psi[y])) return {false, std::pair{x, y}};
    }
  }
  return {};
}

std::vector<FuzzySet> lower_sets(const Quantale& q, const QOrder& r, const Caps& caps) {
  std::vector<FuzzySet> out;
  for_each_fuzzy_set(q, r.size(), caps.enumeration, [&](const FuzzySet& phi) {
    if (is_lower_set(q, r, phi).holds) out.push_back(phi);
  });
  return out;
}

bool is_irreducible_lower_set(const Quantale& q, const QOrder& r, const FuzzySet& phi,
                              const Caps& caps) {
  if (!is_lower_set(q, r, phi).holds) return false;
  if (height(q, phi) != q.top()) return false;
  const auto family = lower_sets(q, r, caps);
  std::vector<Element> to(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) to[i] = sub(q, phi, family[i]);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (sub(q, phi, join(q, family[i], family[j])) != q.join(to[i], to[j])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> suprema(const Quantale& q, const QOrder& r, const FuzzySet& phi) {
  const std::size_t n = r.size();
  if (phi.size() != n) throw Error(ErrorKind::kSpaceMismatch, "suprema", "size mismatch");
  std::vector<Element> bound(n);
  for (std::size_t x = 0; x < n; ++x) bound[x] = sub(q, phi, r.representable(x));
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < n; ++a) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = r(a, x) == bound[x];
    if (ok) out.push_back(a);
  }
  return out;
}

Cotopology alexandroff(std::shared_ptr<const Quantale> q, const PointSet& points, const QOrder& r,
                       const Caps& caps) {
  if (points.size() != r.size()) throw Error(ErrorKind::kSpaceMismatch, "alexandroff", "size mismatch");
  auto family = lower_sets(*q, r, caps);
  return Cotopology::from_family(std::move(q), points, std::move(family), Mode::kStrong);
}

}  // namespace qsober
