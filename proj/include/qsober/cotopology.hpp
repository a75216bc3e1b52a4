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

#ifndef QSOBER_COTOPOLOGY_HPP
#define QSOBER_COTOPOLOGY_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "qsober/fuzzy_set.hpp"
#include "qsober/qorder.hpp"
#include "qsober/quantale.hpp"

namespace qsober {

/// Requested closure conditions. kStrong = kStratified + kCostratified.
enum class Mode { kPlain, kStratified, kCostratified, kStrong };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view name);
bool requires_stratified(Mode mode);
bool requires_costratified(Mode mode);

/// Which closure conditions a family actually satisfies.
struct Axioms {
  bool constants = false;    // every p_X
  bool joins = false;        // A v B
  bool meets = false;        // A ^ B
  bool stratified = false;   // p -> A
  bool costratified = false; // p & A

  bool cotopology() const { return constants && joins && meets; }
  /// Strongest mode the family satisfies; only meaningful if cotopology().
  Mode strongest_mode() const;
};

/// Re-derives every closure condition of `family` (assumed canonical).
Axioms check_axioms(const Quantale& q, std::size_t points, const std::vector<FuzzySet>& family);

/** A finite Q-cotopological space: a deduplicated, canonically ordered family
    of closed fuzzy sets containing the constants and closed under binary joins
    and meets (arbitrary meets reduce to these plus the top constant), plus p->
    and/or p& according to the mode. */
class Cotopology {
 public:
  /// Validates the family against the mode; throws Error(kLawViolation) with
  /// the violated condition otherwise.
  static Cotopology from_family(std::shared_ptr<const Quantale> q, PointSet points,
                                std::vector<FuzzySet> family, Mode mode);
  /// All of Q^X, capped by caps.enumeration. Strong.
  static Cotopology discrete(std::shared_ptr<const Quantale> q, PointSet points, const Caps& caps);
  /// Constants only. Strong.
  static Cotopology indiscrete(std::shared_ptr<const Quantale> q, PointSet points);

  const Quantale& quantale() const noexcept { return *quantale_; }
  const std::shared_ptr<const Quantale>& quantale_ptr() const noexcept { return quantale_; }
  const PointSet& points() const noexcept { return points_; }
  std::size_t point_count() const noexcept { return points_.size(); }
  const std::vector<FuzzySet>& closed() const noexcept { return closed_; }
  std::size_t size() const noexcept { return closed_.size(); }
  Mode mode() const noexcept { return mode_; }
  const Axioms& axioms() const noexcept { return axioms_; }
  /// C4 as re-derived from the family, independent of the requested mode.
  bool is_stratified() const noexcept { return axioms_.stratified; }

  bool contains(const FuzzySet& a) const;
  std::optional<std::size_t> index_of(const FuzzySet& a) const;

 private:
  Cotopology() = default;
  std::shared_ptr<const Quantale> quantale_;
  PointSet points_;
  std::vector<FuzzySet> closed_;
  Mode mode_ = Mode::kPlain;
  Axioms axioms_;
};

/// Least cotopology containing the subbasis, closed under the mode's
/// operations; worklist fixpoint. Throws Error(kCapExceeded, "cotopology").
Cotopology generate(std::shared_ptr<const Quantale> q, const PointSet& points,
                    const std::vector<FuzzySet>& subbasis, Mode mode, const Caps& caps);

/// Meet of all closed sets above A.
FuzzySet closure(const Cotopology& tau, const FuzzySet& a);
/// meet over closed B of sub(A, B) -> B; agrees with closure() exactly when
/// the space is stratified.
FuzzySet closure_by_inclusion(const Cotopology& tau, const FuzzySet& a);

struct ContinuityCheck {
  bool continuous = true;
  std::optional<FuzzySet> witness;  // a closed set of the target whose preimage is not closed
};
ContinuityCheck is_continuous(const PointMap& f, const Cotopology& source, const Cotopology& target);

/// Omega(tau)(x, y) = meet over closed A of A(y) -> A(x).
QOrder specialization(const Cotopology& tau);

/// Generated from preimages of closed sets along both projections, in the
/// weaker of the two modes. Point (x, y) has index x * |Y| + y.
Cotopology product(const Cotopology& left, const Cotopology& right, const Caps& caps);

/// The diagonal of X x X, as a fuzzy set on the product points.
FuzzySet diagonal(const Quantale& q, std::size_t points);

/// Whether the diagonal is closed in product(tau, tau). Uses the direct
/// description of the product family (meets of A(x) v B(y)) when the quantale
/// is distributive, p -> (-) preserves binary joins (stratified modes) and
/// p & (-) preserves binary meets (costratified modes); otherwise generates
/// the product.
bool is_hausdorff(const Cotopology& tau, const Caps& caps);

/// Closure of the diagonal computed from the meets-of-cylinder-joins
/// description only; exposed for cross-checks against full generation.
FuzzySet diagonal_closure_by_cylinders(const Cotopology& tau);
bool cylinder_description_applies(const Cotopology& tau);

}  // namespace qsober

#endif  // QSOBER_COTOPOLOGY_HPP
