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

#ifndef SPREADLAB_RNG_HPP
#define SPREADLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "spreadlab/vertex_set.hpp"

namespace spreadlab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream seed for (base seed, stream index). Per-trial streams make
// Monte Carlo results independent of the worker count.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(splitmix64(base) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

// mt19937_64 with a portable bounded draw; std::uniform_int_distribution is
// implementation-defined and would break byte-identical outputs across
// standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % bound);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Partial Fisher-Yates: the first k entries of `pool` become a uniform k-subset
// of its contents. `pool` must hold 0..n-1 in any order.
inline VertexBits random_subset_bits(Rng& rng, std::vector<Vertex>& pool, unsigned k) {
  VertexBits b{};
  const auto n = pool.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(pool[i], pool[j]);
    bits::set(b, pool[i]);
  }
  return b;
}

inline VertexSet random_subset(Rng& rng, unsigned n, unsigned k) {
  std::vector<Vertex> pool(n);
  for (unsigned i = 0; i < n; ++i) pool[i] = i;
  return VertexSet::from_bits(random_subset_bits(rng, pool, k));
}

}  // namespace spreadlab

#endif  // SPREADLAB_RNG_HPP
