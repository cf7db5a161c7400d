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

#ifndef SPREADLAB_SPREAD_HPP
#define SPREADLAB_SPREAD_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "spreadlab/hypergraph.hpp"
#include "spreadlab/rational.hpp"

namespace spreadlab {

inline constexpr std::uint64_t kDefaultCandidateBudget = 8'000'000;

// Spread target: a strictly decreasing r-sequence r_1 > ... > r_l >= 1 plus
// either one q (tiered spread) or one q_i per consecutive pair (multi-level).
struct SpreadProfile {
  std::vector<Rational> q_values;
  std::vector<unsigned> r_sequence;
  bool multilevel = false;

  static SpreadProfile tiered(Rational q, std::vector<unsigned> r_sequence);
  static SpreadProfile levels(std::vector<Rational> q_values, std::vector<unsigned> r_sequence);

  std::size_t num_levels() const { return r_sequence.size(); }
  // q governing the level pair (i, i+1), zero-based.
  const Rational& q_for_pair(std::size_t i) const { return multilevel ? q_values[i] : q_values[0]; }

  // Throws InputError on a malformed profile.
  void validate() const;
};

enum class Verdict { pass, fail, no_violation_found };

const char* to_string(Verdict v);

// A violated inequality: M_j(A) = lhs > rhs = q^j |H| (for plain q-spread,
// j = |A| and lhs = d(A)). `level` is the zero-based level pair.
struct Witness {
  VertexSet set;
  unsigned j = 0;
  std::size_t level = 0;
  Count lhs = 0;
  Rational rhs;
};

struct CertResult {
  Verdict verdict = Verdict::pass;
  std::optional<Witness> witness;
  std::uint64_t sets_checked = 0;
  std::uint64_t samples = 0;  // nonzero only for sampled certification

  bool passed() const { return verdict == Verdict::pass; }
};

// Exact certification over all candidate sets (A with d(A) > 0). On failure
// the witness is the lexicographically first failing (A, j). Throws
// ResourceError when the candidate enumeration would exceed `budget`.
CertResult certify_q_spread(const Hypergraph& h, const Rational& q,
                            std::uint64_t budget = kDefaultCandidateBudget);
CertResult certify_tiered(const Hypergraph& h, const SpreadProfile& profile,
                          std::uint64_t budget = kDefaultCandidateBudget);
CertResult certify_multilevel(const Hypergraph& h, const SpreadProfile& profile,
                              std::uint64_t budget = kDefaultCandidateBudget);

// Random candidate sets (uniform edge, uniform admissible size, uniform subset
// of that edge). Never returns pass: either a verified violation or
// no_violation_found after `samples` draws.
CertResult certify_q_spread_sampled(const Hypergraph& h, const Rational& q, std::uint64_t samples,
                                    std::uint64_t seed);
CertResult certify_profile_sampled(const Hypergraph& h, const SpreadProfile& profile,
                                   std::uint64_t samples, std::uint64_t seed);

// Re-derives lhs from the hypergraph and confirms lhs > rhs.
bool recheck_witness(const Hypergraph& h, const Witness& w);

// (count / total)^(1 / exponent), compared exactly.
struct RootRatio {
  Count count = 0;
  Count total = 1;
  unsigned exponent = 1;

  double value() const;
  // The value as a rational when it is one (e.g. exponent 1).
  std::optional<Rational> exact() const;
  // Smallest a/den with (a/den)^exponent >= count/total.
  Rational upper(std::uint64_t den) const;
  // Largest a/den strictly below the value (0 if none).
  Rational strictly_below(std::uint64_t den) const;
};

// <0, 0, >0 as a is smaller, equal, larger than b.
int compare(const RootRatio& a, const RootRatio& b);

struct MinSpread {
  RootRatio q;
  std::optional<VertexSet> witness;  // absent when no constraint applies
  unsigned j = 0;
  std::size_t level = 0;
};

// max over A != {} with d(A) > 0 of (d(A)/|H|)^(1/|A|). H non-empty.
MinSpread min_q_spread(const Hypergraph& h, std::uint64_t budget = kDefaultCandidateBudget);
// max over admissible (A, j) of (M_j(A)/|H|)^(1/j). A one-level sequence
// imposes no constraint and yields 0 without a witness.
MinSpread min_q_tiered(const Hypergraph& h, const std::vector<unsigned>& r_sequence,
                       std::uint64_t budget = kDefaultCandidateBudget);

}  // namespace spreadlab

#endif  // SPREADLAB_SPREAD_HPP
