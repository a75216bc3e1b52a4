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

#ifndef QSOBER_QUANTALE_HPP
#define QSOBER_QUANTALE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsober {

/// An element of a finite quantale, identified by its position in the
/// carrier. Values are never interpreted numerically.
using Element = std::uint16_t;

enum class StandardKind { kGodel, kLukasiewicz, kNilpotentMin, kBoolean4, kProduct };

std::string_view to_string(StandardKind kind);
std::optional<StandardKind> parse_standard_kind(std::string_view name);

/** A finite commutative integral quantale.

    The carrier is {0, ..., size()-1} with a partial order given by a table.
    Construction validates every axiom exhaustively (complete lattice,
    commutative monoid with the top as unit, distributivity of the tensor over
    binary joins and the bottom) and derives the join, meet and residuation
    tables, so an invalid Quantale value never exists.

    Instances are immutable and may be shared across threads.
*/
class Quantale {
 public:
  using BoolTable = std::vector<std::vector<bool>>;
  using ElementTable = std::vector<std::vector<std::size_t>>;

  /// Throws Error(kLawViolation) naming the first failing law with a witness.
  static Quantale build(std::vector<std::string> labels, const BoolTable& leq,
                        const ElementTable& tensor, std::string name = "custom");

  /// Chain {0, 1/(n-1), ..., 1} with the named t-norm, or the four-element
  /// Boolean algebra (n ignored). kProduct throws Error(kUnsupportedKind).
  static Quantale standard(StandardKind kind, std::size_t n = 0);

  std::size_t size() const noexcept { return size_; }
  const std::string& name() const noexcept { return name_; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }

  bool leq(Element a, Element b) const { return leq_[at(a, b)] != 0; }
  Element join(Element a, Element b) const { return join_[at(a, b)]; }
  Element meet(Element a, Element b) const { return meet_[at(a, b)]; }
  Element tensor(Element a, Element b) const { return tensor_[at(a, b)]; }
  /// Residuation a -> b: the largest q with a & q <= b.
  Element implies(Element a, Element b) const { return implies_[at(a, b)]; }
  /// a -> 0.
  Element negate(Element a) const { return implies_[at(a, bottom_)]; }

  Element join_all(std::span<const Element> xs) const;
  Element meet_all(std::span<const Element> xs) const;

  const std::string& label(Element a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find(std::string_view label) const;

  std::vector<Element> elements() const;

 private:
  Quantale() = default;
  std::size_t at(Element a, Element b) const noexcept {
    return static_cast<std::size_t>(a) * size_ + b;
  }

  std::string name_;
  std::size_t size_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Element> join_;
  std::vector<Element> meet_;
  std::vector<Element> tensor_;
  std::vector<Element> implies_;
};

/// a -> r, named after the operation it computes.
inline Element residuate(const Quantale& q, Element p, Element r) { return q.implies(p, r); }

struct DoubleNegationCheck {
  bool holds = false;
  std::optional<Element> witness;  // some p with (p -> 0) -> 0 != p
};

/// When the law holds, the derived negation identities are verified as well;
/// a failure there throws Error(kLawViolation).
DoubleNegationCheck check_double_negation(const Quantale& q);

/// Nonzero elements a such that a <= b v c implies a <= b or a <= c.
std::vector<Element> coprimes(const Quantale& q);
bool has_enough_coprimes(const Quantale& q);
bool is_linear(const Quantale& q);

}  // namespace qsober

#endif  // QSOBER_QUANTALE_HPP
