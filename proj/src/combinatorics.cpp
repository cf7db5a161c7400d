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

#include "spreadlab/combinatorics.hpp"

#include "spreadlab/errors.hpp"

namespace spreadlab {

std::uint64_t binom_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r * (n-k+i) is divisible by i at each step
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<Vertex> unrank_combination(unsigned n, unsigned k, std::uint64_t rank) {
  if (k > n) throw InputError("combination size exceeds ground set");
  std::vector<Vertex> c;
  c.reserve(k);
  Vertex next = 0;
  for (unsigned slot = 0; slot < k; ++slot) {
    // Skip blocks of combinations that start with `next`.
    while (true) {
      const std::uint64_t block = binom_u64(n - next - 1, k - slot - 1);
      if (rank < block) break;
      rank -= block;
      ++next;
    }
    c.push_back(next++);
  }
  return c;
}

std::uint64_t rank_combination(unsigned n, std::span<const Vertex> combination) {
  const auto k = static_cast<unsigned>(combination.size());
  std::uint64_t rank = 0;
  Vertex next = 0;
  for (unsigned slot = 0; slot < k; ++slot) {
    for (; next < combination[slot]; ++next) rank += binom_u64(n - next - 1, k - slot - 1);
    ++next;
  }
  return rank;
}

bool next_combination(std::vector<Vertex>& c, unsigned n) {
  const auto k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace spreadlab
