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

#ifndef QSOBER_FUZZY_SET_HPP
#define QSOBER_FUZZY_SET_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsober/quantale.hpp"

namespace qsober {

/// Limits on exhaustive work. Defaults may be overridden through the
/// QSOBER_CAP_ENUMERATION, QSOBER_CAP_COTOPOLOGY and QSOBER_CAP_MAPS
/// environment variables (see from_env).
struct Caps {
  std::size_t enumeration = 100000;  // candidates drawn from Q^X
  std::size_t cotopology = 20000;    // closed sets in a generated family
  std::size_t maps = 10000;          // maps enumerated for uniqueness checks

  static Caps from_env();
  static Caps from_env(Caps defaults);
};

/// Labels of a finite point set X.
class PointSet {
 public:
  PointSet() = default;
  /// Throws Error(kMalformedInput) on duplicate names.
  explicit PointSet(std::vector<std::string> names);
  /// Points named x0, x1, ...
  static PointSet anonymous(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<std::string> names_;
};

/// A map X -> Q stored as one Element per point. Ordering is lexicographic on
/// the value sequence, which is the canonical order for families.
struct FuzzySet {
  std::vector<Element> values;

  FuzzySet() = default;
  explicit FuzzySet(std::vector<Element> v) : values(std::move(v)) {}

  std::size_t size() const noexcept { return values.size(); }
  Element operator[](std::size_t x) const { return values[x]; }
  Element& operator[](std::size_t x) { return values[x]; }

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;
  friend auto operator<=>(const FuzzySet&, const FuzzySet&) = default;
};

struct FuzzySetHash {
  std::size_t operator()(const FuzzySet& a) const noexcept;
};

/// A total map between finite point sets, by index.
struct PointMap {
  std::size_t target_size = 0;
  std::vector<std::size_t> assignment;

  std::size_t source_size() const noexcept { return assignment.size(); }
  std::size_t operator()(std::size_t x) const { return assignment[x]; }
  static PointMap identity(std::size_t n);
  friend bool operator==(const PointMap&, const PointMap&) = default;
};

FuzzySet constant(const Quantale& q, std::size_t points, Element p);
/// 1_x: top at x, bottom elsewhere.
FuzzySet point_indicator(const Quantale& q, std::size_t points, std::size_t x);
/// 1_K for a subset given as a bit mask.
FuzzySet subset_indicator(const Quantale& q, std::size_t points, std::uint64_t mask);
bool is_constant(const FuzzySet& a);

/// sub_X(A, B) = meet over x of A(x) -> B(x). Throws Error(kSpaceMismatch).
Element sub(const Quantale& q, const FuzzySet& a, const FuzzySet& b);
/// Pointwise order; A <= B iff sub(A, B) = 1.
bool leq(const Quantale& q, const FuzzySet& a, const FuzzySet& b);
/// Join of all values of A.
Element height(const Quantale& q, const FuzzySet& a);

enum class PointwiseOp { kJoin, kMeet, kTensorScale, kResidualScale };

FuzzySet join(const Quantale& q, const FuzzySet& a, const FuzzySet& b);
FuzzySet meet(const Quantale& q, const FuzzySet& a, const FuzzySet& b);
/// p & A.
FuzzySet tensor_scale(const Quantale& q, Element p, const FuzzySet& a);
/// p -> A.
FuzzySet residual_scale(const Quantale& q, Element p, const FuzzySet& a);
/// Pointwise negation A(x) -> 0.
FuzzySet negate(const Quantale& q, const FuzzySet& a);

/// Dispatch form: kJoin/kMeet combine `a` and `b`; the scale kinds use
/// `scalar` and ignore `b`.
FuzzySet pointwise(const Quantale& q, PointwiseOp op, const FuzzySet& a, const FuzzySet& b,
                   Element scalar = 0);

FuzzySet join_all(const Quantale& q, std::size_t points, const std::vector<FuzzySet>& family);
FuzzySet meet_all(const Quantale& q, std::size_t points, const std::vector<FuzzySet>& family);

/// f->(A)(y) = join of A(x) over the fiber of y (empty fiber gives bottom).
FuzzySet image(const Quantale& q, const PointMap& f, const FuzzySet& a);
/// f<-(B) = B o f.
FuzzySet preimage(const Quantale& q, const PointMap& f, const FuzzySet& b);

/// Number of fuzzy sets |Q|^points, saturated at SIZE_MAX.
std::size_t count_fuzzy_sets(const Quantale& q, std::size_t points);

/// Visits every element of Q^X in canonical order. Throws
/// Error(kCapExceeded, "enumeration") when |Q|^|X| exceeds `cap`.
void for_each_fuzzy_set(const Quantale& q, std::size_t points, std::size_t cap,
                        const std::function<void(const FuzzySet&)>& visit);
std::vector<FuzzySet> enumerate_fuzzy_sets(const Quantale& q, std::size_t points, std::size_t cap);

/// Sorts and removes duplicates.
void canonicalize(std::vector<FuzzySet>& family);

/// "(a,b)" using the quantale's labels.
std::string format(const Quantale& q, const FuzzySet& a);

}  // namespace qsober

#endif  // QSOBER_FUZZY_SET_HPP
