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

#ifndef QSOBER_CORPUS_HPP
#define QSOBER_CORPUS_HPP

// Seeded corpora of small generated spaces for property sweeps. The stream is
// std::mt19937_64 reduced by modulo, so a seed fixes the corpus on every
// platform.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qsober/cotopology.hpp"

namespace qsober {

struct CorpusBounds {
  std::size_t count = 60;
  std::size_t max_quantale = 4;  // largest carrier among the builders used
  std::size_t max_points = 3;
  std::size_t max_subbasis = 3;
  bool chains_only = false;
  bool double_negation_only = false;
};

struct CorpusMember {
  std::string name;
  Cotopology space;
};

/// Builder quantales with at most `max_size` elements: Gödel and Łukasiewicz
/// chains from 2, nilpotent-minimum chains from 3, and boolean4.
std::vector<std::shared_ptr<const Quantale>> corpus_quantales(std::size_t max_size, bool chains_only = false,
                                                              bool double_negation_only = false);

/// Throws Error(kCapExceeded) if a member outgrows `caps`, and
/// Error(kMalformedInput) if no builder quantale fits the bounds.
std::vector<CorpusMember> make_corpus(std::uint64_t seed, const CorpusBounds& bounds, const Caps& caps);

}  // namespace qsober

#endif  // QSOBER_CORPUS_HPP
