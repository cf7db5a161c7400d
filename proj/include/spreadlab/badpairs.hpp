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

#ifndef SPREADLAB_BADPAIRS_HPP
#define SPREADLAB_BADPAIRS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "spreadlab/hypergraph.hpp"
#include "spreadlab/io.hpp"
#include "spreadlab/rational.hpp"

namespace spreadlab {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 200'000'000;

struct BadPairParams {
  Rational c{4};
  Rational q{1, 8};
  unsigned k = 1;
  unsigned pn = 0;  // |W|

  Rational p() const { return c * q; }
};

// The lemma's standing assumptions for an r-uniform H on n vertices.
// `literal` records whether pn equals p n exactly; `certified` whether H is
// (q; r, k)-spread.
struct Hypotheses {
  bool c_at_least_4 = false;
  bool p_at_most_half = false;
  bool pn_at_least_2r = false;
  bool pn_within_n = false;
  bool literal = false;
  bool certified = false;

  bool numeric() const { return c_at_least_4 && p_at_most_half && pn_at_least_2r && pn_within_n; }
  bool all() const { return numeric() && literal && certified; }
};

Hypotheses check_hypotheses(const Hypergraph& h, const BadPairParams& params,
                            std::uint64_t budget = 8'000'000);

// Whether H is (q; r, k)-spread. For k >= r only |A| = r constrains.
bool certified_pair_spread(const Hypergraph& h, const Rational& q, unsigned k, std::uint64_t budget = 8'000'000);

struct IntersectionRow {
  unsigned t = 0;
  unsigned w = 0;                    // pn - t
  Count bad = 0;                     // |B_t|
  Count pathological = 0;
  Count non_pathological = 0;
  RadicalRational n_threshold;       // N for this w
  RadicalRational claim_bound;       // (C/2)^(-k/2) |H| C(r,t) C(n-r,w)
  bool non_pathological_holds = false;
  bool pathological_holds = false;   // against twice claim_bound
  Rational expectation_sum;          // sum over S of E[S(W')]
  bool markov_holds = false;         // pathological * N <= C(r,t) C(n-r,w) * expectation_sum
};

struct BadPairReport {
  BadPairParams params;
  std::size_t n = 0;
  unsigned r = 0;
  std::size_t h_size = 0;
  Hypotheses hypotheses;
  std::vector<IntersectionRow> rows;
  Count total = 0;
  RadicalRational bound;
  bool within_bound = false;
  BigInt sets_enumerated;

  // Non-pathological claim and Markov step at every t; neither needs spread.
  bool counting_checks_hold() const;
};

// Exhaustive count over S in H and W of size pn. With require_hypotheses the
// numeric hypotheses are enforced (PreconditionError); otherwise they are
// only reported. Throws ResourceError when |H| C(n, pn) exceeds budget.
BadPairReport count_bad_pairs(const Hypergraph& h, const BadPairParams& params, bool require_hypotheses = true,
                              std::uint64_t budget = kDefaultEnumerationBudget);

// N = (C/2)^(-k/2) |H| C(n-r, w) / C(n, w+r).
RadicalRational pathology_threshold(std::size_t n, unsigned r, unsigned w, unsigned k, const Rational& c,
                                    std::size_t h_size);

struct PathologyVerdict {
  Count count = 0;  // edges S inside Z with (S, Z \ S) k-bad
  bool pathological = false;
};

// Z must have r + w vertices.
PathologyVerdict is_pathological(const Hypergraph& h, const VertexSet& z, unsigned k, unsigned w,
                                 const RadicalRational& n_threshold);

// E[S(W')] over W' uniform in C(V \ S, w), in closed form.
Rational expected_S(const Hypergraph& h, const VertexSet& s, unsigned w, unsigned k);

// The same expectation by enumerating every W'.
Rational expected_S_oracle(const Hypergraph& h, const VertexSet& s, unsigned w, unsigned k,
                           std::uint64_t budget = 100'000);

// 3 (C/2)^(-k/2) |H| C(n, pn). C must be at least 4.
RadicalRational lemma21_bound(std::size_t n, unsigned pn, unsigned k, const Rational& c, std::size_t h_size);

// C(w, r-j)/C(n-r, r-j) * C(n, w+r)/C(n-r, w) <= (w/(n-r))^(-j), exactly.
bool binomial_ratio_bound_check(unsigned n, unsigned r, unsigned w, unsigned j);

json to_json(const BadPairReport& report);

}  // namespace spreadlab

#endif  // SPREADLAB_BADPAIRS_HPP
