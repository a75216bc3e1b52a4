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

#ifndef QSOBER_DUALITY_HPP
#define QSOBER_DUALITY_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsober/cotopology.hpp"
#include "qsober/sobriety.hpp"

namespace qsober {

/// Subsets of a crisp point set (at most 64 points) as bit masks.
using Subset = std::uint64_t;

/// A finite topology given by its closed subsets.
class CrispTopology {
 public:
  /// Validates: contains the empty set and X, closed under binary union and
  /// intersection. Throws Error(kLawViolation).
  static CrispTopology from_closed(std::size_t points, std::vector<Subset> closed);
  static CrispTopology discrete(std::size_t points);
  static CrispTopology indiscrete(std::size_t points);

  std::size_t size() const noexcept { return points_; }
  Subset full() const noexcept { return points_ == 64 ? ~Subset{0} : (Subset{1} << points_) - 1; }
  const std::vector<Subset>& closed() const noexcept { return closed_; }
  bool is_closed(Subset s) const;
  Subset closure(Subset s) const;

  friend bool operator==(const CrispTopology&, const CrispTopology&) = default;

 private:
  std::size_t points_ = 0;
  std::vector<Subset> closed_;
};

/// Every topology on `points` points (points <= 4), in canonical order.
std::vector<CrispTopology> all_crisp_topologies(std::size_t points);

/// Nonempty closed K such that K within A u B forces K within A or K within B.
std::vector<Subset> irreducible_closed_subsets(const CrispTopology& x);
/// Every irreducible closed subset is the closure of exactly one point.
bool is_crisp_sober(const CrispTopology& x);

/// Upper semicontinuous maps X -> Q: lambda with {x : lambda(x) >= p} closed
/// for every coprime p. Throws kNotEnoughCoprimes or kCapExceeded.
Cotopology lowen(std::shared_ptr<const Quantale> q, const PointSet& points, const CrispTopology& x,
                 const Caps& caps);

struct GoodExtensionCheck {
  bool crisp_sober = false;
  SoberReport fuzzy;
  bool agrees = false;
};

/// crisp-sober(X) iff is_sober(lowen(X)). Throws kNonLinearQuantale.
GoodExtensionCheck good_extension_check(std::shared_ptr<const Quantale> q, const PointSet& points,
                                        const CrispTopology& x, const Caps& caps);

enum class OpenMode { kWeak, kStratified };
std::string_view to_string(OpenMode mode);

/// Which opening conditions a family actually satisfies.
struct OpenAxioms {
  bool constants = false;  // O1
  bool meets = false;      // O2
  bool joins = false;      // O3 (binary plus the bottom constant)
  bool stratified = false; // O4: p & U
  bool topology() const { return constants && meets && joins; }
};

OpenAxioms check_open_axioms(const Quantale& q, std::size_t points, const std::vector<FuzzySet>& family);

/** A finite Q-topology: the open-set dual of Cotopology. */
class QTopology {
 public:
  /// Validates O1-O3 and O4 when `mode` is kStratified.
  static QTopology from_family(std::shared_ptr<const Quantale> q, PointSet points,
                               std::vector<FuzzySet> family, OpenMode mode);

  const Quantale& quantale() const noexcept { return *quantale_; }
  const std::shared_ptr<const Quantale>& quantale_ptr() const noexcept { return quantale_; }
  const PointSet& points() const noexcept { return points_; }
  std::size_t point_count() const noexcept { return points_.size(); }
  const std::vector<FuzzySet>& open() const noexcept { return open_; }
  std::size_t size() const noexcept { return open_.size(); }
  OpenMode mode() const noexcept { return mode_; }
  const OpenAxioms& axioms() const noexcept { return axioms_; }
  std::optional<std::size_t> index_of(const FuzzySet& u) const;

 private:
  QTopology() = default;
  std::shared_ptr<const Quantale> quantale_;
  PointSet points_;
  std::vector<FuzzySet> open_;
  OpenMode mode_ = OpenMode::kWeak;
  OpenAxioms axioms_;
};

/// {not A : A closed}. Stratified cotopologies map to stratified topologies.
/// Throws Error(kNoDoubleNegation) with the witness element.
QTopology negate_topology(const Cotopology& tau);
/// {not U : U open}. Stratified topologies map to stratified cotopologies.
Cotopology negate_topology(const QTopology& tau);

/// An assignment open set -> element, indexed like QTopology::open().
using FrMap = std::vector<Element>;

struct FrCheck {
  bool fr1 = true;  // g(p_X) = p
  bool fr2 = true;  // binary meets
  bool fr3 = true;  // joins of every subfamily of size <= 3, the whole family, and the empty one
  bool fr4 = true;  // g(p & U) = p & g(U)
  bool all() const { return fr1 && fr2 && fr3 && fr4; }
};

FrCheck check_fr_axioms(const QTopology& tau, const FrMap& g);

/// f_F(U) = join over x of F(x) & U(x).
FrMap fr_map_of_irreducible(const QTopology& tau, const FuzzySet& f);
/// meet { A closed in not(tau) : g(not A) = 0 }.
FuzzySet irreducible_of_fr_map(const QTopology& tau, const FrMap& g);
/// U -> U(x).
FrMap point_evaluation(const QTopology& tau, std::size_t x);

/// All FrMaps through the irreducible closed sets of not(tau), ordered like
/// those irreducibles. Requires a stratified topology.
std::vector<FrMap> fr_points(const QTopology& tau);

/// All FrMaps by constraint search over assignment tables; an independent
/// route for cross-checks. Throws Error(kCapExceeded) once the search visits
/// more than caps.enumeration nodes.
std::vector<FrMap> fr_points_by_search(const QTopology& tau, const Caps& caps);

struct TopologicalSobriety {
  bool sober = false;
  bool used_search = false;          // false means the irreducible route was used
  std::size_t fr_maps = 0;
  std::vector<std::size_t> failures; // indices of FrMaps that are not a unique point evaluation
};

/// Every FrMap is point evaluation at exactly one point. Prefers the search
/// route and falls back to the irreducible route when the search hits its cap.
TopologicalSobriety is_sober_topological(const QTopology& tau, const Caps& caps);

}  // namespace qsober

#endif  // QSOBER_DUALITY_HPP
