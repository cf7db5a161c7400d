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

#ifndef SPREADLAB_REFERENCE_HPP
#define SPREADLAB_REFERENCE_HPP

#include <cstdint>
#include <vector>

#include "spreadlab/hypergraph.hpp"
#include "spreadlab/rational.hpp"
#include "spreadlab/spread.hpp"

// Serial, definition-level versions of the parallel kernels. They scan every
// subset of V, so n is limited to 20.
namespace spreadlab::reference {

bool is_q_spread(const Hypergraph& h, const Rational& q);
bool is_profile_spread(const Hypergraph& h, const SpreadProfile& profile);
RootRatio min_q_spread(const Hypergraph& h);

struct BadPairCounts {
  std::vector<Count> bad;           // by t = |S ∩ W|
  std::vector<Count> pathological;  // by t
};

// Pathology thresholds are indexed by t.
BadPairCounts count_bad_pairs(const Hypergraph& h, unsigned k, unsigned pn,
                              const std::vector<RadicalRational>& thresholds);

std::uint64_t containment_successes(const Hypergraph& h, std::size_t set_size, std::uint64_t trials,
                                    std::uint64_t seed);
Rational exact_containment(const Hypergraph& h, std::size_t set_size);

}  // namespace spreadlab::reference

#endif  // SPREADLAB_REFERENCE_HPP
