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

#include "doctest.h"
#include "oracles.hpp"
#include "qsober/error.hpp"
#include "qsober/fuzzy_set.hpp"
#include "support.hpp"

using namespace qsober;
using testing::el;
using testing::set;

namespace {

// Every map from n points to m points.
std::vector<PointMap> all_maps(std::size_t n, std::size_t m) {
  std::vector<PointMap> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= m;
  for (std::size_t code = 0; code < total; ++code) {
    PointMap f{m, std::vector<std::size_t>(n)};
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= m) f.assignment[i] = c % m;
    out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("point sets reject duplicate names") {
  CHECK_THROWS_AS(PointSet({"x", "x"}), Error);
  PointSet p = PointSet::anonymous(3);
  CHECK(p.name(2) == "x2");
  CHECK(p.find("x1") == std::size_t{1});
  CHECK_FALSE(p.find("y").has_value());
}

TEST_CASE("sub on small examples") {
  auto q = testing::boolean4();
  CHECK(sub(*q, set(*q, {"a", "b"}), set(*q, {"0", "1"})) == el(*q, "b"));

  auto l5 = testing::lukasiewicz(5);
  for (Element p = 0; p < 5; ++p)
    for (Element r = 0; r < 5; ++r) CHECK(sub(*l5, constant(*l5, 3, p), constant(*l5, 3, r)) == l5->implies(p, r));

  // Empty meet.
  CHECK(sub(*l5, FuzzySet{}, FuzzySet{}) == l5->top());

  CHECK_THROWS_AS(sub(*q, set(*q, {"a"}), set(*q, {"a", "b"})), Error);
  try {
    sub(*q, set(*q, {"a"}), set(*q, {"a", "b"}));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kSpaceMismatch);
  }
}

TEST_CASE("sub is a Q-order matching the oracle") {
  for (const auto& qp : {testing::godel(4), testing::lukasiewicz(4), testing::nilpotent(4), testing::boolean4()}) {
    const Quantale& q = *qp;
    CAPTURE(q.name());
    auto sets = oracle::all_sets(q, 2);
    for (const auto& a : sets) {
      CHECK(sub(q, a, a) == q.top());
      for (const auto& b : sets) {
        const Element ab = sub(q, a, b);
        CHECK(ab == oracle::sub(q, a, b));
        CHECK(leq(q, a, b) == (ab == q.top()));
        CHECK(leq(q, a, b) == oracle::pointwise_leq(q, a, b));
        for (Element p = 0; p < q.size(); ++p) {
          CHECK(q.leq(p, ab) == leq(q, tensor_scale(q, p, a), b));
          CHECK(q.leq(p, ab) == leq(q, a, residual_scale(q, p, b)));
          CHECK(q.implies(p, ab) == sub(q, tensor_scale(q, p, a), b));
          CHECK(q.implies(p, ab) == sub(q, a, residual_scale(q, p, b)));
        }
      }
    }
    auto small = oracle::all_sets(q, 2);
    for (const auto& a : small)
      for (const auto& b : small)
        for (const auto& c : small) CHECK(q.leq(q.tensor(sub(q, b, c), sub(q, a, b)), sub(q, a, c)));
  }
}

TEST_CASE("pointwise operations") {
  auto q = testing::boolean4();
  auto a = set(*q, {"a", "b"});
  CHECK(tensor_scale(*q, q->top(), a) == a);
  CHECK(residual_scale(*q, q->top(), a) == a);
  CHECK(tensor_scale(*q, el(*q, "a"), set(*q, {"b", "1"})) == set(*q, {"0", "a"}));
  CHECK(pointwise(*q, PointwiseOp::kTensorScale, set(*q, {"b", "1"}), {}, el(*q, "a")) == set(*q, {"0", "a"}));
  CHECK(negate(*q, a) == set(*q, {"b", "a"}));

  std::vector<FuzzySet> points;
  for (std::size_t x = 0; x < 3; ++x) points.push_back(point_indicator(*q, 3, x));
  CHECK(join_all(*q, 3, points) == constant(*q, 3, q->top()));
  CHECK(meet_all(*q, 3, points) == constant(*q, 3, q->bottom()));
  CHECK(join_all(*q, 3, {}) == constant(*q, 3, q->bottom()));
  CHECK(meet_all(*q, 3, {}) == constant(*q, 3, q->top()));
  CHECK(subset_indicator(*q, 3, 0b101) == FuzzySet{{3, 0, 3}});
  CHECK(format(*q, a) == "(a,b)");
}

TEST_CASE("image and preimage") {
  auto q = testing::lukasiewicz(5);
  auto id = PointMap::identity(2);
  for (const auto& a : oracle::all_sets(*q, 2)) {
    CHECK(image(*q, id, a) == a);
    CHECK(preimage(*q, id, a) == a);
  }
  PointMap to_one{1, {0, 0, 0}};
  for (const auto& a : oracle::all_sets(*q, 3))
    CHECK(image(*q, to_one, a)[0] == oracle::join_of(*q, a.values));

  // Empty fiber goes to the bottom.
  PointMap into{3, {2, 2}};
  CHECK(image(*q, into, FuzzySet{{4, 1}}) == FuzzySet{{0, 0, 4}});

  PointMap swap{2, {1, 0}};
  auto sets = oracle::all_sets(*q, 2);
  for (const auto& a : sets)
    for (const auto& b : sets) CHECK(sub(*q, image(*q, swap, a), b) == sub(*q, a, preimage(*q, swap, b)));
}

TEST_CASE("image and preimage are adjoint and monotone for every small map") {
  for (const auto& qp : {testing::godel(3), testing::lukasiewicz(4), testing::boolean4()}) {
    const Quantale& q = *qp;
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t m = 1; m <= 2; ++m)
        for (const auto& f : all_maps(n, m)) {
          auto xs = oracle::all_sets(q, n);
          auto ys = oracle::all_sets(q, m);
          for (const auto& a : xs)
            for (const auto& b : ys) CHECK(sub(q, image(q, f, a), b) == sub(q, a, preimage(q, f, b)));
          for (const auto& a : xs)
            for (const auto& a2 : xs) CHECK(q.leq(sub(q, a, a2), sub(q, image(q, f, a), image(q, f, a2))));
          for (const auto& b : ys)
            for (const auto& b2 : ys) CHECK(q.leq(sub(q, b, b2), sub(q, preimage(q, f, b), preimage(q, f, b2))));
        }
  }
}

TEST_CASE("enumeration order, counting and cap") {
  auto q = testing::godel(3);
  auto sets = enumerate_fuzzy_sets(*q, 2, 100);
  CHECK(sets.size() == 9);
  CHECK(std::is_sorted(sets.begin(), sets.end()));
  CHECK(sets == oracle::all_sets(*q, 2));
  CHECK(count_fuzzy_sets(*q, 2) == 9);
  CHECK(count_fuzzy_sets(*q, 200) == SIZE_MAX);
  CHECK(enumerate_fuzzy_sets(*q, 0, 1).size() == 1);
  try {
    enumerate_fuzzy_sets(*q, 3, 26);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kCapExceeded);
    CHECK(e.subject() == "enumeration");
  }

  std::vector<FuzzySet> family = {FuzzySet{{2, 0}}, FuzzySet{{0, 1}}, FuzzySet{{2, 0}}};
  canonicalize(family);
  CHECK(family == std::vector<FuzzySet>{FuzzySet{{0, 1}}, FuzzySet{{2, 0}}});
}

TEST_CASE("caps read overrides from the environment") {
  setenv("QSOBER_CAP_MAPS", "17", 1);
  Caps c = Caps::from_env();
  CHECK(c.maps == 17);
  CHECK(c.enumeration == Caps{}.enumeration);
  unsetenv("QSOBER_CAP_MAPS");
}
