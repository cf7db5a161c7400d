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

#include "spreadlab/reference.hpp"

#include <bit>
#include <numeric>

#include "spreadlab/errors.hpp"
#include "spreadlab/rng.hpp"

namespace spreadlab::reference {

namespace {

constexpr unsigned kMaxBruteVertices = 20;

std::uint32_t limit(const Hypergraph& h) {
  if (h.num_vertices() > kMaxBruteVertices) throw ResourceError("reference scan is limited to 20 vertices");
  return std::uint32_t{1} << h.num_vertices();
}

VertexSet set_of(std::uint32_t mask) {
  std::vector<Vertex> v;
  for (Vertex i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1U) v.push_back(i);
  }
  return VertexSet::from_sorted(std::move(v));
}

Count meets(const Hypergraph& h, const VertexSet& a, unsigned j) {
  Count c = 0;
  for (const auto& e : h.edges()) {
    unsigned common = 0;
    for (Vertex v : a) common += e.contains(v) ? 1 : 0;
    c += common >= j ? 1 : 0;
  }
  return c;
}

Rational total(const Hypergraph& h) { return Rational(BigInt(static_cast<unsigned long>(h.size()))); }

}  // namespace

bool is_q_spread(const Hypergraph& h, const Rational& q) {
  const std::uint32_t end = limit(h);
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    const VertexSet a = set_of(mask);
    const Count d = meets(h, a, static_cast<unsigned>(a.size()));
    if (Rational(BigInt(static_cast<unsigned long>(d))) > pow(q, static_cast<unsigned>(a.size())) * total(h)) {
      return false;
    }
  }
  return true;
}

bool is_profile_spread(const Hypergraph& h, const SpreadProfile& profile) {
  const std::uint32_t end = limit(h);
  const auto& r = profile.r_sequence;
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    const VertexSet a = set_of(mask);
    const auto size = static_cast<unsigned>(a.size());
    if (meets(h, a, size) == 0) continue;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
      if (size > r[i] || size < r[i + 1]) continue;
      for (unsigned j = r[i + 1]; j <= size; ++j) {
        const Count m = meets(h, a, j);
        if (Rational(BigInt(static_cast<unsigned long>(m))) > pow(profile.q_for_pair(i), j) * total(h)) return false;
      }
    }
  }
  return true;
}

RootRatio min_q_spread(const Hypergraph& h) {
  const std::uint32_t end = limit(h);
  RootRatio best{0, h.size(), 1};
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    const VertexSet a = set_of(mask);
    const auto size = static_cast<unsigned>(a.size());
    const RootRatio cand{meets(h, a, size), h.size(), size};
    if (compare(cand, best) > 0) best = cand;
  }
  return best;
}

BadPairCounts count_bad_pairs(const Hypergraph& h, unsigned k, unsigned pn,
                              const std::vector<RadicalRational>& thresholds) {
  const std::uint32_t end = limit(h);
  BadPairCounts out;
  const unsigned r = uniformity(h).max_size;
  out.bad.assign(r + 1, 0);
  out.pathological.assign(r + 1, 0);
  auto good = [&](const VertexSet& s, const VertexSet& w) {
    for (const auto& other : h.edges()) {
      bool inside = true;
      unsigned outside_w = 0;
      for (Vertex v : other) {
        if (!s.contains(v) && !w.contains(v)) inside = false;
        if (!w.contains(v)) ++outside_w;
      }
      if (inside && outside_w <= k) return true;
    }
    return false;
  };
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) != pn) continue;
    const VertexSet w = set_of(mask);
    for (const auto& s : h.edges()) {
      if (good(s, w)) continue;
      unsigned t = 0;
      std::uint32_t z = mask;
      for (Vertex v : s) {
        t += w.contains(v) ? 1 : 0;
        z |= std::uint32_t{1} << v;
      }
      ++out.bad[t];
      const VertexSet zs = set_of(z);
      Count inside_bad = 0;
      for (const auto& cand : h.edges()) {
        if (!cand.is_subset_of(zs)) continue;
        std::vector<Vertex> rest;
        for (Vertex v : zs) {
          if (!cand.contains(v)) rest.push_back(v);
        }
        if (!good(cand, VertexSet::from_sorted(std::move(rest)))) ++inside_bad;
      }
      if (less(thresholds.at(t), Rational(BigInt(static_cast<unsigned long>(inside_bad))))) ++out.pathological[t];
    }
  }
  return out;
}

std::uint64_t containment_successes(const Hypergraph& h, std::size_t set_size, std::uint64_t trials,
                                    std::uint64_t seed) {
  std::vector<Vertex> pool(h.num_vertices());
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    std::iota(pool.begin(), pool.end(), Vertex{0});
    Rng rng(derive_seed(seed, i));
    const VertexBits w = random_subset_bits(rng, pool, static_cast<unsigned>(set_size));
    for (std::size_t e = 0; e < h.size(); ++e) {
      if (bits::is_subset(h.edge_bits(e), w)) {
        ++hits;
        break;
      }
    }
  }
  return hits;
}

Rational exact_containment(const Hypergraph& h, std::size_t set_size) {
  const std::uint32_t end = limit(h);
  std::uint64_t hits = 0, total_sets = 0;
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != set_size) continue;
    ++total_sets;
    const VertexSet w = set_of(mask);
    for (const auto& e : h.edges()) {
      if (e.is_subset_of(w)) {
        ++hits;
        break;
      }
    }
  }
  if (total_sets == 0) throw InputError("set size exceeds n");
  Rational p(BigInt(static_cast<unsigned long>(hits)), BigInt(static_cast<unsigned long>(total_sets)));
  p.canonicalize();
  return p;
}

}  // namespace spreadlab::reference
