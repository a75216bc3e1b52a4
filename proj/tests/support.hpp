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

#ifndef QSOBER_TESTS_SUPPORT_HPP
#define QSOBER_TESTS_SUPPORT_HPP

#include <memory>
#include <string>
#include <vector>

#include "qsober/cotopology.hpp"
#include "qsober/quantale.hpp"

namespace testing {

using QPtr = std::shared_ptr<const qsober::Quantale>;

inline QPtr make(qsober::StandardKind kind, std::size_t n = 0) {
  return std::make_shared<const qsober::Quantale>(qsober::Quantale::standard(kind, n));
}

inline QPtr godel(std::size_t n) { return make(qsober::StandardKind::kGodel, n); }
inline QPtr lukasiewicz(std::size_t n) { return make(qsober::StandardKind::kLukasiewicz, n); }
inline QPtr nilpotent(std::size_t n) { return make(qsober::StandardKind::kNilpotentMin, n); }
inline QPtr boolean4() { return make(qsober::StandardKind::kBoolean4); }

/// The three chain families for n in [lo, hi], then boolean4.
inline std::vector<QPtr> builtins(std::size_t lo, std::size_t hi) {
  std::vector<QPtr> out;
  for (std::size_t n = lo; n <= hi; ++n) {
    out.push_back(godel(n));
    out.push_back(lukasiewicz(n));
    out.push_back(nilpotent(n));
  }
  out.push_back(boolean4());
  return out;
}

inline qsober::Element el(const qsober::Quantale& q, const std::string& label) { return *q.find(label); }

/// Fuzzy set from labels, e.g. set(q, {"a", "b"}).
inline qsober::FuzzySet set(const qsober::Quantale& q, std::initializer_list<const char*> labels) {
  qsober::FuzzySet a;
  for (const char* l : labels) a.values.push_back(el(q, l));
  return a;
}

}  // namespace testing

#endif  // QSOBER_TESTS_SUPPORT_HPP
