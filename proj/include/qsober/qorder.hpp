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

#ifndef QSOBER_QORDER_HPP
#define QSOBER_QORDER_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "qsober/fuzzy_set.hpp"
#include "qsober/quantale.hpp"

namespace qsober {

class Cotopology;

/** A Q-order on a finite set: a table R with R(x,x) = 1 and
    R(y,z) & R(x,y) <= R(x,z). Not assumed antisymmetric. */
class QOrder {
 public:
  /// `table` is row-major, table[x * n + y] = R(x, y). Throws
  /// Error(kNotReflexive) or Error(kNotTransitive) with witnesses.
  static QOrder validate(const Quantale& q, std::size_t points, std::vector<Element> table);
  static QOrder validate(const Quantale& q, const std::vector<std::vector<Element>>& rows);

  /// d_L(p, q) = p -> q on the carrier of q.
  static QOrder left_distance(const Quantale& q);
  /// d_R(p, q) = q -> p on the carrier of q.
  static QOrder right_distance(const Quantale& q);
  /// 1 on the diagonal, 0 elsewhere.
  static QOrder discrete(const Quantale& q, std::size_t points);

  std::size_t size() const noexcept { return points_; }
  Element operator()(std::size_t x, std::size_t y) const { return table_[x * points_ + y]; }
  const std::vector<Element>& table() const noexcept { return table_; }

  QOrder opposite() const;
  /// R(-, a).
  FuzzySet representable(std::size_t a) const;

  friend bool operator==(const QOrder&, const QOrder&) = default;

 private:
  QOrder(std::size_t points, std::vector<Element> table)
      : points_(points), table_(std::move(table)) {}
  std::size_t points_ = 0;
  std::vector<Element> table_;
};

struct PairCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// phi(y) & R(x,y) <= phi(x) for all x, y.
PairCheck is_lower_set(const Quantale& q, const QOrder& r, const FuzzySet& phi);
/// R(x,y) & psi(x) <= psi(y) for all x, y.
PairCheck is_upper_set(const Quantale& q, const QOrder& r, const FuzzySet& psi);

/// Every fuzzy lower set, in canonical order, filtered from the capped Q^X.
std::vector<FuzzySet> lower_sets(const Quantale& q, const QOrder& r, const Caps& caps);

/// Height 1 and sub(phi, a v b) = sub(phi, a) v sub(phi, b) for every pair of
/// lower sets. Throws Error(kCapExceeded) through the enumeration.
bool is_irreducible_lower_set(const Quantale& q, const QOrder& r, const FuzzySet& phi,
                              const Caps& caps);

/// All points a with R(a, x) = meet_z (phi(z) -> R(z, x)) for every x. Empty
/// when phi has no supremum.
std::vector<std::size_t> suprema(const Quantale& q, const QOrder& r, const FuzzySet& phi);

/// Gamma(R): the strong cotopology of all fuzzy lower sets.
Cotopology alexandroff(std::shared_ptr<const Quantale> q, const PointSet& points,
                       const QOrder& r, const Caps& caps);

}  // namespace qsober

#endif  // QSOBER_QORDER_HPP
