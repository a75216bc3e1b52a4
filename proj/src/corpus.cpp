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

#include "qsober/corpus.hpp"

#include <random>

#include "qsober/error.hpp"

namespace qsober {

std::vector<std::shared_ptr<const Quantale>> corpus_quantales(std::size_t max_size, bool chains_only,
                                                              bool double_negation_only) {
  std::vector<std::shared_ptr<const Quantale>> out;
  auto add = [&](StandardKind kind, std::size_t n) {
    auto q = std::make_shared<const Quantale>(Quantale::standard(kind, n));
    if (double_negation_only && !check_double_negation(*q).holds) return;
    out.push_back(std::move(q));
  };
  for (std::size_t n = 2; n <= max_size; ++n) add(StandardKind::kGodel, n);
  for (std::size_t n = 2; n <= max_size; ++n) add(StandardKind::kLukasiewicz, n);
  for (std::size_t n = 3; n <= max_size; ++n) add(StandardKind::kNilpotentMin, n);
  if (!chains_only && max_size >= 4) add(StandardKind::kBoolean4, 0);
  return out;
}

std::vector<CorpusMember> make_corpus(std::uint64_t seed, const CorpusBounds& bounds, const Caps& caps) {
  auto quantales = corpus_quantales(bounds.max_quantale, bounds.chains_only, bounds.double_negation_only);
  if (quantales.empty() || bounds.max_points == 0)
    throw Error(ErrorKind::kMalformedInput, "bounds", "no builder quantale fits the corpus bounds");

  std::mt19937_64 rng(seed);
  auto draw = [&rng](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
  // Stratified spaces are the interesting ones for sobriety, so they get
  // twice the weight of the other modes.
  static constexpr Mode kModes[] = {Mode::kPlain, Mode::kStratified, Mode::kStratified, Mode::kStrong};

  std::vector<CorpusMember> out;
  out.reserve(bounds.count);
  for (std::size_t i = 0; i < bounds.count; ++i) {
    const auto& q = quantales[draw(quantales.size())];
    const std::size_t points = 1 + draw(bounds.max_points);
    const Mode mode = kModes[draw(std::size(kModes))];
    const std::size_t generators = draw(bounds.max_subbasis + 1);
    std::vector<FuzzySet> subbasis;
    for (std::size_t g = 0; g < generators; ++g) {
      FuzzySet a{std::vector<Element>(points)};
      for (std::size_t x = 0; x < points; ++x) a[x] = static_cast<Element>(draw(q->size()));
      subbasis.push_back(std::move(a));
    }
    std::string name = "c" + std::to_string(i) + "-" + q->name() + "-" + std::to_string(points) + "pt-" +
                       std::string(to_string(mode));
    out.push_back({std::move(name), generate(q, PointSet::anonymous(points), subbasis, mode, caps)});
  }
  return out;
}

}  // namespace qsober
