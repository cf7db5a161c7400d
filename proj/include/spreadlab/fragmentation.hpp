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

#ifndef SPREADLAB_FRAGMENTATION_HPP
#define SPREADLAB_FRAGMENTATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/hypergraph.hpp"
#include "spreadlab/io.hpp"
#include "spreadlab/rational.hpp"
#include "spreadlab/spread.hpp"

namespace spreadlab {

// (S, W) is k-good when some edge S' satisfies S' ⊆ S ∪ W and |S' \ W| <= k.
// The witness minimizes |S' \ W|, ties broken by lexicographic edge order and
// then by edge index.
struct GoodnessVerdict {
  bool good = false;
  std::size_t witness_index = 0;
  VertexSet witness_edge;
  VertexSet residual;  // S' \ W
};

GoodnessVerdict is_k_good(const Hypergraph& h, std::size_t s_index, const VertexSet& w, unsigned k);
// Throws InputError when S is not an edge of H.
GoodnessVerdict is_k_good(const Hypergraph& h, const VertexSet& s, const VertexSet& w, unsigned k);

// One level of the refinement: the hypergraph plus, per edge, its original
// edge (provenance) and an original edge contained in the edge together with
// every W used so far (transfer). Index position is the edge identity, so
// equal sets from different parents stay distinct.
struct Stage {
  Hypergraph edges;
  std::vector<std::size_t> provenance;
  std::vector<std::size_t> transfer;
};

Stage initial_stage(const Hypergraph& h);

struct RoundResult {
  Stage next;
  std::vector<std::size_t> parent;   // edge of next -> the S it came from
  std::vector<std::size_t> witness;  // edge of next -> the S' chosen for S
  bool successful = false;
};

// Keeps each S whose pair (S, W) is r_next-good and replaces it by A_S: the
// residual S' \ W padded with the smallest remaining labels of S up to size
// r_next. successful iff |next| >= (1 - 1/(2 levels)) |current|.
RoundResult refine_round(const Stage& current, const VertexSet& w, unsigned r_next, std::size_t levels);

enum class TraceStatus { completed, extinct };

struct RoundRecord {
  unsigned index = 0;  // round i maps H_i to H_{i+1}
  VertexSet w;
  std::size_t size_before = 0;
  std::size_t size_after = 0;
  bool successful = false;
  Stage next;
  std::vector<std::size_t> parent;
  std::vector<std::size_t> witness;
};

struct FragmentationTrace {
  std::vector<unsigned> r_sequence;
  Rational q;
  Rational c;
  std::uint64_t seed = 0;
  std::size_t set_size = 0;  // floor(C q n)
  std::vector<RoundRecord> rounds;
  Stage final_stage;
  TraceStatus status = TraceStatus::completed;
  std::vector<std::string> warnings;

  std::size_t levels() const { return r_sequence.size(); }
  // H_i for 1 <= i <= rounds.size() + 1; H_1 is the input.
  const Stage& stage(std::size_t i, const Stage& first) const;
  bool all_successful_before(std::size_t i) const;
};

// Samples W_1, ..., W_{l-1} of size floor(C q n) and applies refine_round
// with r_next = r_{i+1}; stops with status extinct on an empty stage.
// H must be r_1-uniform and C q <= 1/2.
FragmentationTrace run_fragmentation(const Hypergraph& h, const std::vector<unsigned>& r_sequence,
                                     const Rational& q, const Rational& c, std::uint64_t seed);

// The r-sequence for stage i: (r_i, ..., r_l) followed by 1 unless r_l is 1.
std::vector<unsigned> tail_sequence(const std::vector<unsigned>& r_sequence, std::size_t i);

enum class PreservationStatus { pass, fail, not_applicable, no_violation_found };
const char* to_string(PreservationStatus s);

struct PreservationEntry {
  std::size_t stage = 1;
  PreservationStatus status = PreservationStatus::not_applicable;
  std::vector<unsigned> r_sequence;
  Rational q;
  std::optional<CertResult> cert;
};

// Certifies every stage H_i reached through successful rounds as
// (min(2q, 1); r_i, ..., r_l, 1)-spread. Stages over the exact budget fall
// back to `samples` sampled checks.
std::vector<PreservationEntry> check_spread_preservation(const Hypergraph& h, const FragmentationTrace& trace,
                                                         const Rational& q,
                                                         std::uint64_t budget = kDefaultCandidateBudget,
                                                         std::uint64_t samples = 20000);

struct TraceCheck {
  bool provenance_injective = true;
  bool provenance_contains = true;  // A ⊆ phi(A)
  bool uniform = true;
  bool transfer = true;             // transfer(A) ⊆ A ∪ W_1 ∪ ... ∪ W_i
  bool m_monotone = true;           // M_j(A; H_i) <= M_j(A; H), exhaustive, small n only
  bool size_product = true;         // successful prefixes keep (1 - 1/(2l))^(i-1) |H|
  std::vector<std::string> problems;

  bool ok() const {
    return provenance_injective && provenance_contains && uniform && transfer && m_monotone && size_product;
  }
};

// Verifies the structural invariants of a trace. The exhaustive M_j
// comparison runs only when n <= max_exhaustive_n.
TraceCheck check_trace_invariants(const Hypergraph& h, const FragmentationTrace& trace,
                                  std::size_t max_exhaustive_n = 12);

// Empirical frequency of an unsuccessful first round against
// 6 l (C/4)^(-r_2/2). When that bound is >= 1 the check is vacuous; if C q
// also exceeds 1/2 no runs are made.
struct FailureFrequency {
  std::uint64_t runs = 0;
  std::uint64_t failures = 0;
  double frequency = 0;
  double standard_error = 0;
  double bound = 0;
  bool vacuous = false;
  bool executed = false;
  bool holds = false;
};

FailureFrequency round_failure_frequency(const Hypergraph& h, const std::vector<unsigned>& r_sequence,
                                         const Rational& q, const Rational& c, std::uint64_t runs,
                                         std::uint64_t seed);

json to_json(const FragmentationTrace& t);
json to_json(const PreservationEntry& e);

}  // namespace spreadlab

#endif  // SPREADLAB_FRAGMENTATION_HPP
