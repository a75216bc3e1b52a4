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

#include "qsober/fuzzy_set.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <set>
#include <utility>

#include "qsober/error.hpp"

namespace qsober {
namespace {

void require_same(const FuzzySet& a, const FuzzySet& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::kSpaceMismatch, "fuzzy-set",
                "operands live on spaces of size " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
}

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::size_t value = 0;
  const char* end = raw + std::char_traits<char>::length(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::kMalformedInput, name, "expected a non-negative integer");
  }
  return value;
}

}  // namespace

Caps Caps::from_env() { return from_env(Caps{}); }

Caps Caps::from_env(Caps defaults) {
  Caps c = defaults;
  c.enumeration = env_or("QSOBER_CAP_ENUMERATION", c.enumeration);
  c.cotopology = env_or("QSOBER_CAP_COTOPOLOGY", c.cotopology);
  c.maps = env_or("QSOBER_CAP_MAPS", c.maps);
  return c;
}

PointSet::PointSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) {
      throw Error(ErrorKind::kMalformedInput, "points", "duplicate point name '" + n + "'");
    }
  }
}

PointSet PointSet::anonymous(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return PointSet(std::move(names));
}

std::optional<std::size_t> PointSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t FuzzySetHash::operator()(const FuzzySet& a) const noexcept {
  // FNV-1a over the element indices.
  std::size_t h = 1469598103934665603ull;
  for (Element e : a.values) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

PointMap PointMap::identity(std::size_t n) {
  PointMap f;
  f.target_size = n;
  f.assignment.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.assignment[i] = i;
  return f;
}

FuzzySet constant(const Quantale&, std::size_t points, Element p) {
  return FuzzySet(std::vector<Element>(points, p));
}

FuzzySet point_indicator(const Quantale& q, std::size_t points, std::size_t x) {
  FuzzySet a{std::vector<Element>(points, q.bottom())};
  a[x] = q.top();
  return a;
}

FuzzySet subset_indicator(const Quantale& q, std::size_t points, std::uint64_t mask) {
  FuzzySet a{std::vector<Element>(points, q.bottom())};
  for (std::size_t x = 0; x < points; ++x) {
    if ((mask >> x) & 1u) a[x] = q.top();
  }
  return a;
}

bool is_constant(const FuzzySet& a) {
  return std::adjacent_find(a.values.begin(), a.values.end(), std::not_equal_to<>()) ==
         a.values.end();
}

Element sub(const Quantale& q, const FuzzySet& a, const FuzzySet& b) {
  require_same(a, b);
  Element acc = q.top();
  for (std::size_t x = 0; x < a.size(); ++x) acc = q.meet(acc, q.implies(a[x], b[x]));
  return acc;
}

bool leq(const Quantale& q, const FuzzySet& a, const FuzzySet& b) {
  require_same(a, b);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!q.leq(a[x], b[x])) return false;
  }
  return true;
}

Element height(const Quantale& q, const FuzzySet& a) { return q.join_all(a.values); }

FuzzySet join(const Quantale& q, const FuzzySet& a, const FuzzySet& b) {
  require_same(a, b);
  FuzzySet out(a.values);
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = q.join(a[x], b[x]);
  return out;
}

FuzzySet meet(const Quantale& q, const FuzzySet& a, const FuzzySet& b) {
  require_same(a, b);
  FuzzySet out(a.values);
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = q.meet(a[x], b[x]);
  return out;
}

FuzzySet tensor_scale(const Quantale& q, Element p, const FuzzySet& a) {
  FuzzySet out(a.values);
  for (auto& v : out.values) v = q.tensor(p, v);
  return out;
}

FuzzySet residual_scale(const Quantale& q, Element p, const FuzzySet& a) {
  FuzzySet out(a.values);
  for (auto& v : out.values) v = q.implies(p, v);
  return out;
}

FuzzySet negate(const Quantale& q, const FuzzySet& a) {
  FuzzySet out(a.values);
  for (auto& v : out.values) v = q.negate(v);
  return out;
}

FuzzySet pointwise(const Quantale& q, PointwiseOp op, const FuzzySet& a, const FuzzySet& b,
                   Element scalar) {
  switch (op) {
    case PointwiseOp::kJoin: return join(q, a, b);
    case PointwiseOp::kMeet: return meet(q, a, b);
    case PointwiseOp::kTensorScale: return tensor_scale(q, scalar, a);
    case PointwiseOp::kResidualScale: return residual_scale(q, scalar, a);
  }
  return a;
}

FuzzySet join_all(const Quantale& q, std::size_t points, const std::vector<FuzzySet>& family) {
  FuzzySet acc = constant(q, points, q.bottom());
  for (const auto& a : family) acc = join(q, acc, a);
  return acc;
}

FuzzySet meet_all(const Quantale& q, std::size_t points, const std::vector<FuzzySet>& family) {
  FuzzySet acc = constant(q, points, q.top());
  for (const auto& a : family) acc = meet(q, acc, a);
  return acc;
}

FuzzySet image(const Quantale& q, const PointMap& f, const FuzzySet& a) {
  if (a.size() != f.source_size()) {
    throw Error(ErrorKind::kSpaceMismatch, "image", "fuzzy set does not live on the map's source");
  }
  FuzzySet out{std::vector<Element>(f.target_size, q.bottom())};
  for (std::size_t x = 0; x < a.size(); ++x) out[f(x)] = q.join(out[f(x)], a[x]);
  return out;
}

FuzzySet preimage(const Quantale&, const PointMap& f, const FuzzySet& b) {
  if (b.size() != f.target_size) {
    throw Error(ErrorKind::kSpaceMismatch, "preimage", "fuzzy set does not live on the map's target");
  }
  FuzzySet out{std::vector<Element>(f.source_size())};
  for (std::size_t x = 0; x < f.source_size(); ++x) out[x] = b[f(x)];
  return out;
}

std::size_t count_fuzzy_sets(const Quantale& q, std::size_t points) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < points; ++i) {
    if (total > std::numeric_limits<std::size_t>::max() / q.size()) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= q.size();
  }
  return total;
}

void for_each_fuzzy_set(const Quantale& q, std::size_t points, std::size_t cap,
                        const std::function<void(const FuzzySet&)>& visit) {
  const std::size_t total = count_fuzzy_sets(q, points);
  if (total > cap) {
    throw Error(ErrorKind::kCapExceeded, "enumeration",
                "|Q|^|X| = " + (total == std::numeric_limits<std::size_t>::max()
                                    ? std::string("overflow")
                                    : std::to_string(total)) +
                    " exceeds the cap of " + std::to_string(cap));
  }
  FuzzySet cur{std::vector<Element>(points, 0)};
  const auto last = static_cast<Element>(q.size() - 1);
  for (std::size_t i = 0; i < total; ++i) {
    visit(cur);
    // Odometer increment, last point fastest, so output is lexicographic.
    for (std::size_t x = points; x-- > 0;) {
      if (cur[x] < last) {
        ++cur[x];
        break;
      }
      cur[x] = 0;
    }
  }
}

std::vector<FuzzySet> enumerate_fuzzy_sets(const Quantale& q, std::size_t points, std::size_t cap) {
  std::vector<FuzzySet> out;
  for_each_fuzzy_set(q, points, cap, [&](const FuzzySet& a) { out.push_back(a); });
  return out;
}

void canonicalize(std::vector<FuzzySet>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::string format(const Quantale& q, const FuzzySet& a) {
  std::string out = "(";
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (x) out += ",";
    out += q.label(a[x]);
  }
  return out + ")";
}

}  // namespace qsober
