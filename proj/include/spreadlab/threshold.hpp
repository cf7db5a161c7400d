// Copyright 2026 The Spreadlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPREADLAB_THRESHOLD_HPP
#define SPREADLAB_THRESHOLD_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spreadlab/fragmentation.hpp"
#include "spreadlab/hypergraph.hpp"
#include "spreadlab/io.hpp"
#include "spreadlab/rational.hpp"

namespace spreadlab {

inline constexpr std::uint64_t kDefaultExactBudget = 10'000'000;
inline constexpr std::size_t kInclusionExclusionEdges = 20;

struct ThresholdEstimate {
  std::size_t set_size = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double p_hat = 0;
  double lo = 0;
  double hi = 1;
  double standard_error = 0;
  double confidence = 0.95;
  std::uint64_t seed = 0;
  bool extinct = false;  // endgame on an empty final stage
};

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence);

// Trial i draws W with its own generator seeded by derive_seed(seed, i), so
// the result does not depend on the number of threads.
ThresholdEstimate estimate_containment(const Hypergraph& h, std::size_t set_size, std::uint64_t trials,
                                       std::uint64_t seed, double confidence = 0.95);

enum class ExactMethod { enumeration, inclusion_exclusion };
const char* to_string(ExactMethod m);

struct ExactContainment {
  Rational probability;
  ExactMethod method = ExactMethod::enumeration;
};

// Enumeration when C(n, s) <= budget, else inclusion-exclusion over at most
// 20 distinct edges, else ResourceError.
ExactContainment exact_containment(const Hypergraph& h, std::size_t set_size,
                                   std::uint64_t budget = kDefaultExactBudget);
Rational containment_by_enumeration(const Hypergraph& h, std::size_t set_size,
                                    std::uint64_t budget = kDefaultExactBudget);
Rational containment_by_inclusion_exclusion(const Hypergraph& h, std::size_t set_size);

// One estimate per size; size index i uses derive_seed(seed, i) as its seed.
std::vector<ThresholdEstimate> threshold_scan(const Hypergraph& h, const std::vector<std::size_t>& sizes,
                                              std::uint64_t trials, std::uint64_t seed, double confidence = 0.95);

// Containment of an edge of the final stage by a fresh W'.
ThresholdEstimate endgame_sample(const FragmentationTrace& trace, std::size_t set_size, std::uint64_t trials,
                                 std::uint64_t seed);

json to_json(const ThresholdEstimate& e);

}  // namespace spreadlab

#endif  // SPREADLAB_THRESHOLD_HPP
