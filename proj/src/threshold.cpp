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

#include "spreadlab/threshold.hpp"

#include <omp.h>

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <numeric>

#include "spreadlab/combinatorics.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/rng.hpp"

namespace spreadlab {

namespace {

// Distinct edges with no other edge strictly inside them; containing any edge
// is the same event as containing one of these.
std::vector<VertexBits> minimal_edges(const Hypergraph& h) {
  std::vector<VertexBits> distinct = distinct_edge_bits(h);
  std::sort(distinct.begin(), distinct.end(),
            [](const VertexBits& a, const VertexBits& b) { return bits::count(a) < bits::count(b); });
  std::vector<VertexBits> out;
  for (const auto& e : distinct) {
    bool redundant = false;
    for (const auto& m : out) {
      if (bits::is_subset(m, e)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(e);
  }
  return out;
}

bool contains_edge(const std::vector<VertexBits>& edges, const VertexBits& w) {
  for (const auto& e : edges) {
    if (bits::is_subset(e, w)) return true;
  }
  return false;
}

}  // namespace

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence) {
  if (trials == 0) return {0.0, 1.0};
  if (!(confidence > 0 && confidence < 1)) throw InputError("confidence must lie in (0, 1)");
  const double z = boost::math::quantile(boost::math::normal(), 1 - (1 - confidence) / 2);
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1 + z2 / n;
  const double center = (p + z2 / (2 * n)) / denom;
  const double half = z / denom * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
  return {std::clamp(std::min(center - half, p), 0.0, 1.0), std::clamp(std::max(center + half, p), 0.0, 1.0)};
}

ThresholdEstimate estimate_containment(const Hypergraph& h, std::size_t set_size, std::uint64_t trials,
                                       std::uint64_t seed, double confidence) {
  const std::size_t n = h.num_vertices();
  if (set_size > n) throw InputError("set size " + std::to_string(set_size) + " exceeds n = " + std::to_string(n));
  const std::vector<VertexBits> edges = minimal_edges(h);
  std::uint64_t successes = 0;
  const auto total = static_cast<std::int64_t>(trials);
#pragma omp parallel reduction(+ : successes)
  {
    std::vector<Vertex> pool(n);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      std::iota(pool.begin(), pool.end(), Vertex{0});
      Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
      const VertexBits w = random_subset_bits(rng, pool, static_cast<unsigned>(set_size));
      successes += contains_edge(edges, w) ? 1 : 0;
    }
  }
  ThresholdEstimate e;
  e.set_size = set_size;
  e.trials = trials;
  e.successes = successes;
  e.seed = seed;
  e.confidence = confidence;
  if (trials > 0) {
    e.p_hat = static_cast<double>(successes) / static_cast<double>(trials);
    e.standard_error = std::sqrt(e.p_hat * (1 - e.p_hat) / static_cast<double>(trials));
  }
  std::tie(e.lo, e.hi) = wilson_interval(successes, trials, confidence);
  return e;
}

const char* to_string(ExactMethod m) {
  return m == ExactMethod::enumeration ? "enumeration" : "inclusion_exclusion";
}

Rational containment_by_enumeration(const Hypergraph& h, std::size_t set_size, std::uint64_t budget) {
  const auto n = static_cast<unsigned>(h.num_vertices());
  if (set_size > n) throw InputError("set size exceeds n");
  const std::uint64_t total = binom_u64(n, set_size);
  if (total > budget) {
    throw ResourceError("enumerating C(" + std::to_string(n) + ", " + std::to_string(set_size) +
                        ") subsets exceeds the budget of " + std::to_string(budget));
  }
  const std::vector<VertexBits> edges = minimal_edges(h);
  const std::uint64_t chunk = 1 << 14;
  const auto chunks = static_cast<std::int64_t>((total + chunk - 1) / chunk);
  std::uint64_t hits = 0;
#pragma omp parallel for reduction(+ : hits) schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t first = static_cast<std::uint64_t>(c) * chunk;
    for_each_combination_in_range(n, static_cast<unsigned>(set_size), first, std::min(total, first + chunk),
                                  [&](const VertexBits& w) { hits += contains_edge(edges, w) ? 1 : 0; });
  }
  Rational p(BigInt(static_cast<unsigned long>(hits)), BigInt(static_cast<unsigned long>(total)));
  p.canonicalize();
  return p;
}

Rational containment_by_inclusion_exclusion(const Hypergraph& h, std::size_t set_size) {
  const auto n = static_cast<long>(h.num_vertices());
  if (set_size > static_cast<std::size_t>(n)) throw InputError("set size exceeds n");
  const std::vector<VertexBits> edges = distinct_edge_bits(h);
  const std::size_t m = edges.size();
  if (m > kInclusionExclusionEdges) {
    throw ResourceError("inclusion-exclusion needs at most " + std::to_string(kInclusionExclusionEdges) +
                        " distinct edges, got " + std::to_string(m));
  }
  // signed[u]: sum over non-empty edge families with union size u of (-1)^(|family|+1)
  std::vector<std::int64_t> signed_count(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t families = std::uint64_t{1} << m;
  for (std::uint64_t mask = 1; mask < families; ++mask) {
    VertexBits u{};
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) u = bits::unite(u, edges[i]);
    }
    signed_count[bits::count(u)] += (std::popcount(mask) % 2 == 1) ? 1 : -1;
  }
  BigInt hits = 0;
  const auto s = static_cast<long>(set_size);
  for (long u = 0; u <= n; ++u) {
    if (signed_count[static_cast<std::size_t>(u)] == 0) continue;
    hits += BigInt(static_cast<long>(signed_count[static_cast<std::size_t>(u)])) * binomial(n - u, s - u);
  }
  Rational p(hits, binomial(n, s));
  p.canonicalize();
  return p;
}

ExactContainment exact_containment(const Hypergraph& h, std::size_t set_size, std::uint64_t budget) {
  const auto n = static_cast<unsigned>(h.num_vertices());
  if (set_size > n) throw InputError("set size exceeds n");
  if (binom_u64(n, set_size) <= budget) {
    return {containment_by_enumeration(h, set_size, budget), ExactMethod::enumeration};
  }
  if (distinct_edge_bits(h).size() <= kInclusionExclusionEdges) {
    return {containment_by_inclusion_exclusion(h, set_size), ExactMethod::inclusion_exclusion};
  }
  throw ResourceError("exact containment unavailable: C(" + std::to_string(n) + ", " + std::to_string(set_size) +
                      ") exceeds the budget and there are more than " + std::to_string(kInclusionExclusionEdges) +
                      " distinct edges");
}

std::vector<ThresholdEstimate> threshold_scan(const Hypergraph& h, const std::vector<std::size_t>& sizes,
                                              std::uint64_t trials, std::uint64_t seed, double confidence) {
  if (!std::is_sorted(sizes.begin(), sizes.end())) throw InputError("scan sizes must be sorted");
  std::vector<ThresholdEstimate> out;
  out.reserve(sizes.size());
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    out.push_back(estimate_containment(h, sizes[i], trials, derive_seed(seed, i), confidence));
  }
  return out;
}

ThresholdEstimate endgame_sample(const FragmentationTrace& trace, std::size_t set_size, std::uint64_t trials,
                                 std::uint64_t seed) {
  const Hypergraph& last = trace.final_stage.edges;
  if (trace.status == TraceStatus::extinct || last.empty()) {
    ThresholdEstimate e;
    e.set_size = set_size;
    e.trials = trials;
    e.seed = seed;
    e.extinct = true;
    std::tie(e.lo, e.hi) = wilson_interval(0, trials, e.confidence);
    return e;
  }
  return estimate_containment(last, set_size, trials, seed);
}

json to_json(const ThresholdEstimate& e) {
  return json{{"set_size", e.set_size},   {"trials", e.trials},
              {"successes", e.successes}, {"p_hat", e.p_hat},
              {"lo", e.lo},               {"hi", e.hi},
              {"stderr", e.standard_error}, {"confidence", e.confidence},
              {"seed", e.seed},           {"extinct", e.extinct}};
}

}  // namespace spreadlab
