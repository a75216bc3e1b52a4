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

#ifndef QSOBER_SOBRIETY_HPP
#define QSOBER_SOBRIETY_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qsober/cotopology.hpp"
#include "qsober/fuzzy_set.hpp"

namespace qsober {

/// Closed F with height 1 and sub(F, A v B) = sub(F, A) v sub(F, B) for all
/// closed A, B. Throws Error(kNotClosed) if F is not in tau.
bool is_irreducible_closed(const Cotopology& tau, const FuzzySet& f);

/// irr(X) in canonical order.
std::vector<FuzzySet> irreducible_closed_sets(const Cotopology& tau);

/// s(A)(F) = sub(F, A) for F ranging over `irreducibles`.
FuzzySet lift_closed(const Quantale& q, const std::vector<FuzzySet>& irreducibles, const FuzzySet& a);

struct Sobrification {
  Cotopology space;                    // s(X), points are irr(X)
  std::vector<FuzzySet> irreducibles;  // point i of s(X)
  PointMap eta;                        // x -> closure(1_x)
};

/// Throws Error(kNotStratified) unless C4 holds for tau.
Sobrification sobrify(const Cotopology& tau);

enum class Verdict { kSober, kNotStratified, kNotSober };
std::string_view to_string(Verdict v);

struct SoberReport {
  Verdict verdict = Verdict::kNotSober;
  std::vector<FuzzySet> irreducibles;
  /// eta[x] indexes irreducibles; empty when the space is not stratified.
  std::vector<std::size_t> eta;
  /// Irreducibles that are the closure of no point or of several points.
  std::vector<std::size_t> witnesses;
};

SoberReport is_sober(const Cotopology& tau);

struct Extension {
  PointMap map;                      // s(X) -> Y
  bool continuous = false;
  bool factors_through_eta = false;  // map o eta == f
  /// Number of continuous g with g o eta = f, when every map s(X) -> Y was
  /// enumerated (|Y|^|s(X)| <= caps.maps); otherwise empty.
  std::optional<std::size_t> solutions_enumerated;
};

/// f*(F) = the unique y with closure(f->(F)) = closure(1_y). Throws
/// kSourceNotStratified, kTargetNotSober, or kLawViolation("continuity").
Extension extend_to_sobrification(const PointMap& f, const Cotopology& source,
                                  const Cotopology& target, const Caps& caps);

struct DirectedCompleteness {
  bool sober = false;
  std::size_t irreducible_lower_sets = 0;
  std::vector<FuzzySet> violations;  // irreducible lower sets without a supremum
  bool complete() const { return violations.empty(); }
};

/// Irreducible fuzzy lower sets of the specialization order, each checked for
/// a supremum. Runs on non-sober spaces too and records the sobriety verdict.
DirectedCompleteness check_directed_complete(const Cotopology& tau, const Caps& caps);

struct HausdorffSoberCheck {
  bool hausdorff = false;
  SoberReport sober;
  bool implication_holds = false;
};

/// Throws Error(kNonLinearQuantale) for non-chains and kNotStratified.
HausdorffSoberCheck hausdorff_implies_sober_check(const Cotopology& tau, const Caps& caps);

}  // namespace qsober

#endif  // QSOBER_SOBRIETY_HPP
