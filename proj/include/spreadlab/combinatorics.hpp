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

#ifndef SPREADLAB_COMBINATORICS_HPP
#define SPREADLAB_COMBINATORICS_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "spreadlab/vertex_set.hpp"

namespace spreadlab {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// C(n, k) in 64 bits; kSaturated on overflow, 0 outside 0 <= k <= n.
std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k);

// Combinadics over the k-subsets of {0..n-1} in lexicographic order.
std::vector<Vertex> unrank_combination(unsigned n, unsigned k, std::uint64_t rank);
std::uint64_t rank_combination(unsigned n, std::span<const Vertex> combination);

// Lexicographic successor in place; false after the last combination.
bool next_combination(std::vector<Vertex>& c, unsigned n);

// Visits combinations with rank in [first, last) as bit vectors.
template <typename F>
void for_each_combination_in_range(unsigned n, unsigned k, std::uint64_t first, std::uint64_t last, F&& f) {
  if (first >= last) return;
  std::vector<Vertex> c = unrank_combination(n, k, first);
  VertexBits b{};
  for (Vertex v : c) bits::set(b, v);
  for (std::uint64_t rank = first; rank < last; ++rank) {
    f(b);
    if (rank + 1 == last) break;
    for (Vertex v : c) b[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    next_combination(c, n);
    for (Vertex v : c) bits::set(b, v);
  }
}

}  // namespace spreadlab

#endif  // SPREADLAB_COMBINATORICS_HPP
