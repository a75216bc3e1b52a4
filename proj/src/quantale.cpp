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

#include "qsober/quantale.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "qsober/error.hpp"

namespace qsober {
namespace {

[[noreturn]] void violation(std::string law, std::string message, std::vector<std::size_t> witness) {
  throw Error(ErrorKind::kLawViolation, std::move(law), std::move(message), std::move(witness));
}

std::string chain_label(std::size_t i, std::size_t n) {
  if (i == 0) return "0";
  if (i + 1 == n) return "1";
  const std::size_t d = n - 1;
  const std::size_t g = std::gcd(i, d);
  return std::to_string(i / g) + "/" + std::to_string(d / g);
}

}  // namespace

std::string_view to_string(StandardKind kind) {
  switch (kind) {
    case StandardKind::kGodel: return "godel";
    case StandardKind::kLukasiewicz: return "lukasiewicz";
    case StandardKind::kNilpotentMin: return "nilpotent_min";
    case StandardKind::kBoolean4: return "boolean4";
    case StandardKind::kProduct: return "product";
  }
  return "unknown";
}

std::optional<StandardKind> parse_standard_kind(std::string_view name) {
  for (auto k : {StandardKind::kGodel, StandardKind::kLukasiewicz, StandardKind::kNilpotentMin,
                 StandardKind::kBoolean4, StandardKind::kProduct}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

Quantale Quantale::build(std::vector<std::string> labels, const BoolTable& leq,
                         const ElementTable& tensor, std::string name) {
  const std::size_t n = labels.size();
  if (n == 0) {
    throw Error(ErrorKind::kMalformedInput, "labels", "carrier must be nonempty");
  }
  if (n > 0xFFFF) {
    throw Error(ErrorKind::kMalformedInput, "labels", "carrier too large");
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
    throw Error(ErrorKind::kMalformedInput, "labels", "labels must be distinct");
  }
  if (leq.size() != n || tensor.size() != n) {
    throw Error(ErrorKind::kMalformedInput, "tables", "tables must be square and match labels");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n || tensor[i].size() != n) {
      throw Error(ErrorKind::kMalformedInput, "tables",
                  "row " + std::to_string(i) + " has the wrong length");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (tensor[i][j] >= n) {
        throw Error(ErrorKind::kMalformedInput, "tensor",
                    "entry out of range at [" + std::to_string(i) + "][" + std::to_string(j) + "]");
      }
    }
  }

  Quantale q;
  q.name_ = std::move(name);
  q.size_ = n;
  q.labels_ = std::move(labels);
  q.leq_.resize(n * n);
  q.tensor_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      q.leq_[i * n + j] = leq[i][j] ? 1 : 0;
      q.tensor_[i * n + j] = static_cast<Element>(tensor[i][j]);
    }
  }
  auto le = [&](std::size_t a, std::size_t b) { return q.leq_[a * n + b] != 0; };

  // Partial order.
  for (std::size_t i = 0; i < n; ++i) {
    if (!le(i, i)) violation("partial-order", "leq is not reflexive", {i});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && le(i, j) && le(j, i)) violation("partial-order", "leq is not antisymmetric", {i, j});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!le(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (le(j, k) && !le(i, k)) violation("partial-order", "leq is not transitive", {i, j, k});
      }
    }
  }

  // Lattice: least upper and greatest lower bounds of every pair.
  q.join_.resize(n * n);
  q.meet_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::optional<std::size_t> lub, glb;
      for (std::size_t u = 0; u < n; ++u) {
        if (le(i, u) && le(j, u) && (!lub || le(u, *lub))) lub = u;
        if (le(u, i) && le(u, j) && (!glb || le(*glb, u))) glb = u;
      }
      // The candidate found last-best must dominate every other bound.
      for (std::size_t u = 0; u < n && lub; ++u) {
        if (le(i, u) && le(j, u) && !le(*lub, u)) lub.reset();
      }
      for (std::size_t u = 0; u < n && glb; ++u) {
        if (le(u, i) && le(u, j) && !le(u, *glb)) glb.reset();
      }
      if (!lub) violation("join", "pair has no least upper bound", {i, j});
      if (!glb) violation("meet", "pair has no greatest lower bound", {i, j});
      q.join_[i * n + j] = static_cast<Element>(*lub);
      q.meet_[i * n + j] = static_cast<Element>(*glb);
    }
  }
  Element top = 0, bottom = 0;
  for (std::size_t i = 1; i < n; ++i) {
    top = q.join_[top * n + i];
    bottom = q.meet_[bottom * n + i];
  }
  q.top_ = top;
  q.bottom_ = bottom;

  // Commutative monoid with the top as unit.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (q.tensor_[i * n + j] != q.tensor_[j * n + i]) {
        violation("commutativity", "tensor is not commutative", {i, j});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (q.tensor_[top * n + i] != i) violation("unit", "top is not the tensor unit", {i});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = q.tensor_[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (q.tensor_[ij * n + k] != q.tensor_[i * n + q.tensor_[j * n + k]]) {
          violation("associativity", "tensor is not associative", {i, j, k});
        }
      }
    }
  }

  // Distributivity over binary joins and the empty join.
  for (std::size_t i = 0; i < n; ++i) {
    if (q.tensor_[i * n + bottom] != bottom) {
      violation("distributivity", "tensor does not preserve the bottom", {i});
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Element lhs = q.tensor_[i * n + q.join_[j * n + k]];
        const Element rhs = q.join_[q.tensor_[i * n + j] * n + q.tensor_[i * n + k]];
        if (lhs != rhs) violation("distributivity", "tensor does not distribute over join", {i, j, k});
      }
    }
  }

  // Residuation p -> r = join { q : p & q <= r }.
  q.implies_.resize(n * n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t r = 0; r < n; ++r) {
      Element acc = bottom;
      for (std::size_t x = 0; x < n; ++x) {
        if (le(q.tensor_[p * n + x], r)) acc = q.join_[acc * n + x];
      }
      q.implies_[p * n + r] = acc;
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t r = 0; r < n; ++r) {
        if (le(q.tensor_[p * n + x], r) != le(x, q.implies_[p * n + r])) {
          violation("adjunction", "p & q <= r does not match q <= p -> r", {p, x, r});
        }
      }
    }
  }
  return q;
}

Quantale Quantale::standard(StandardKind kind, std::size_t n) {
  if (kind == StandardKind::kProduct) {
    throw Error(ErrorKind::kUnsupportedKind, "product",
                "no finite equally spaced chain is closed under the product t-norm");
  }
  if (kind == StandardKind::kBoolean4) {
    // Index bits: bit 0 = a, bit 1 = b.
    std::vector<std::string> labels{"0", "a", "b", "1"};
    BoolTable leq(4, std::vector<bool>(4));
    ElementTable tensor(4, std::vector<std::size_t>(4));
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        leq[i][j] = (i & j) == i;
        tensor[i][j] = i & j;
      }
    }
    return build(std::move(labels), leq, tensor, "boolean4");
  }
  if (n < 2) {
    throw Error(ErrorKind::kMalformedInput, "n", "chain quantales need n >= 2");
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(chain_label(i, n));
  BoolTable leq(n, std::vector<bool>(n));
  ElementTable tensor(n, std::vector<std::size_t>(n));
  const std::size_t m = n - 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      leq[i][j] = i <= j;
      switch (kind) {
        case StandardKind::kGodel:
          tensor[i][j] = std::min(i, j);
          break;
        case StandardKind::kLukasiewicz:
          tensor[i][j] = i + j > m ? i + j - m : 0;
          break;
        case StandardKind::kNilpotentMin:
          tensor[i][j] = i + j > m ? std::min(i, j) : 0;
          break;
        default:
          break;
      }
    }
  }
  return build(std::move(labels), leq, tensor, std::string(to_string(kind)) + "-" + std::to_string(n));
}

Element Quantale::join_all(std::span<const Element> xs) const {
  Element acc = bottom_;
  for (Element x : xs) acc = join(acc, x);
  return acc;
}

Element Quantale::meet_all(std::span<const Element> xs) const {
  Element acc = top_;
  for (Element x : xs) acc = meet(acc, x);
  return acc;
}

std::optional<Element> Quantale::find(std::string_view label) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (labels_[i] == label) return static_cast<Element>(i);
  }
  return std::nullopt;
}

std::vector<Element> Quantale::elements() const {
  std::vector<Element> out(size_);
  std::iota(out.begin(), out.end(), Element{0});
  return out;
}

DoubleNegationCheck check_double_negation(const Quantale& q) {
  DoubleNegationCheck out;
  for (Element p : q.elements()) {
    if (q.negate(q.negate(p)) != p) {
      out.witness = p;
      return out;
    }
  }
  out.holds = true;
  const auto els = q.elements();
  for (Element p : els) {
    for (Element r : els) {
      const Element imp = q.implies(p, r);
      if (imp != q.negate(q.tensor(p, q.negate(r))) || imp != q.implies(q.negate(r), q.negate(p))) {
        violation("double-negation-implication", "p -> q differs from its negation forms", {p, r});
      }
      const Element t = q.tensor(p, r);
      if (t != q.negate(q.implies(r, q.negate(p))) || t != q.negate(q.implies(p, q.negate(r)))) {
        violation("double-negation-tensor", "p & q differs from its negation forms", {p, r});
      }
      if (q.negate(q.meet(p, r)) != q.join(q.negate(p), q.negate(r))) {
        violation("double-negation-de-morgan", "negation does not turn meets into joins", {p, r});
      }
    }
  }
  return out;
}

std::vector<Element> coprimes(const Quantale& q) {
  std::vector<Element> out;
  const auto els = q.elements();
  for (Element a : els) {
    if (a == q.bottom()) continue;
    bool prime = true;
    for (Element b : els) {
      for (Element c : els) {
        if (q.leq(a, q.join(b, c)) && !q.leq(a, b) && !q.leq(a, c)) {
          prime = false;
          break;
        }
      }
      if (!prime) break;
    }
    if (prime) out.push_back(a);
  }
  return out;
}

bool has_enough_coprimes(const Quantale& q) {
  const auto cps = coprimes(q);
  for (Element x : q.elements()) {
    Element acc = q.bottom();
    for (Element c : cps) {
      if (q.leq(c, x)) acc = q.join(acc, c);
    }
    if (acc != x) return false;
  }
  return true;
}

bool is_linear(const Quantale& q) {
  for (Element a : q.elements()) {
    for (Element b : q.elements()) {
      if (!q.leq(a, b) && !q.leq(b, a)) return false;
    }
  }
  return true;
}

}  // namespace qsober
