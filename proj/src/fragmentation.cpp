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

#include "spreadlab/fragmentation.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spreadlab/errors.hpp"
#include "spreadlab/rng.hpp"

namespace spreadlab {

namespace {

// Edge indices sorted by (edge set, index): the witness tie-break order.
std::vector<std::size_t> lexicographic_order(const Hypergraph& h) {
  std::vector<std::size_t> order(h.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return h.edge(a) < h.edge(b); });
  return order;
}

// Index of the best witness for S, or h.size() if (S, W) is k-bad.
std::size_t best_witness(const Hypergraph& h, const std::vector<std::size_t>& order, const VertexBits& s,
                         const VertexBits& w, unsigned k) {
  const VertexBits cover = bits::unite(s, w);
  std::size_t best = h.size();
  unsigned best_residual = k + 1;
  for (std::size_t idx : order) {
    const VertexBits& e = h.edge_bits(idx);
    if (!bits::is_subset(e, cover)) continue;
    const unsigned residual = bits::difference_count(e, w);
    if (residual < best_residual) {
      best_residual = residual;
      best = idx;
      if (residual == 0) break;
    }
  }
  return best;
}

GoodnessVerdict verdict_for(const Hypergraph& h, std::size_t witness, const VertexBits& w) {
  GoodnessVerdict v;
  if (witness == h.size()) return v;
  v.good = true;
  v.witness_index = witness;
  v.witness_edge = h.edge(witness);
  v.residual = VertexSet::from_bits(bits::difference(h.edge_bits(witness), w));
  return v;
}

}  // namespace

GoodnessVerdict is_k_good(const Hypergraph& h, std::size_t s_index, const VertexSet& w, unsigned k) {
  if (s_index >= h.size()) throw InputError("edge index out of range");
  h.validate(w);
  const VertexBits wb = w.bits();
  return verdict_for(h, best_witness(h, lexicographic_order(h), h.edge_bits(s_index), wb, k), wb);
}

GoodnessVerdict is_k_good(const Hypergraph& h, const VertexSet& s, const VertexSet& w, unsigned k) {
  const std::size_t idx = h.find_edge(s);
  if (idx == h.size()) throw InputError("set " + s.to_string() + " is not an edge of the hypergraph");
  return is_k_good(h, idx, w, k);
}

Stage initial_stage(const Hypergraph& h) {
  Stage s{h, std::vector<std::size_t>(h.size()), std::vector<std::size_t>(h.size())};
  std::iota(s.provenance.begin(), s.provenance.end(), std::size_t{0});
  std::iota(s.transfer.begin(), s.transfer.end(), std::size_t{0});
  return s;
}

RoundResult refine_round(const Stage& current, const VertexSet& w, unsigned r_next, std::size_t levels) {
  const Hypergraph& h = current.edges;
  h.validate(w);
  if (!h.empty()) {
    const Uniformity u = uniformity(h);
    if (!u.uniform()) throw InputError("refine_round needs a uniform hypergraph");
    if (r_next >= u.max_size) {
      throw InputError("r_next = " + std::to_string(r_next) + " must be below the edge size " +
                       std::to_string(u.max_size));
    }
  }
  const VertexBits wb = w.bits();
  const std::vector<std::size_t> order = lexicographic_order(h);
  std::vector<std::size_t> chosen(h.size(), h.size());
  const auto m = static_cast<std::int64_t>(h.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < m; ++i) {
    const auto s = static_cast<std::size_t>(i);
    chosen[s] = best_witness(h, order, h.edge_bits(s), wb, r_next);
  }

  RoundResult out;
  std::vector<VertexSet> next_edges;
  for (std::size_t s = 0; s < h.size(); ++s) {
    if (chosen[s] == h.size()) continue;
    const VertexBits residual = bits::difference(h.edge_bits(chosen[s]), wb);
    VertexBits a = residual;
    unsigned size = bits::count(a);
    for (Vertex v : h.edge(s)) {
      if (size == r_next) break;
      if (!bits::test(a, v)) {
        bits::set(a, v);
        ++size;
      }
    }
    next_edges.push_back(VertexSet::from_bits(a));
    out.parent.push_back(s);
    out.witness.push_back(chosen[s]);
    out.next.provenance.push_back(current.provenance[s]);
    out.next.transfer.push_back(current.transfer[chosen[s]]);
  }
  out.next.edges = Hypergraph(h.num_vertices(), std::move(next_edges), h.name());
  // |H_{i+1}| >= (1 - 1/(2l)) |H_i|  <=>  2l |H_{i+1}| >= (2l - 1) |H_i|
  const auto two_l = static_cast<unsigned __int128>(2 * levels);
  out.successful = two_l * out.next.edges.size() >= (two_l - 1) * h.size();
  return out;
}

const Stage& FragmentationTrace::stage(std::size_t i, const Stage& first) const {
  if (i == 1) return first;
  return rounds.at(i - 2).next;
}

bool FragmentationTrace::all_successful_before(std::size_t i) const {
  for (std::size_t r = 0; r + 1 < i; ++r) {
    if (r >= rounds.size() || !rounds[r].successful) return false;
  }
  return true;
}

namespace {

void validate_sequence(const std::vector<unsigned>& r_sequence) {
  SpreadProfile::tiered(Rational(1), r_sequence).validate();
}

std::size_t set_size_for(const Hypergraph& h, const Rational& q, const Rational& c) {
  if (q <= 0 || q > 1) throw InputError("q must lie in (0, 1]");
  if (c <= 0) throw InputError("C must be positive");
  const Rational p = c * q;
  if (p > Rational(1, 2)) throw InputError("p = C q = " + to_string(p) + " exceeds 1/2");
  return static_cast<std::size_t>(to_u64_saturating(floor(p * Rational(BigInt(static_cast<unsigned long>(h.num_vertices()))))));
}

}  // namespace

FragmentationTrace run_fragmentation(const Hypergraph& h, const std::vector<unsigned>& r_sequence,
                                     const Rational& q, const Rational& c, std::uint64_t seed) {
  validate_sequence(r_sequence);
  const Uniformity u = uniformity(h);
  if (!u.uniform()) throw InputError("fragmentation needs a uniform hypergraph");
  if (u.max_size != r_sequence.front()) {
    throw InputError("hypergraph is " + std::to_string(u.max_size) + "-uniform but r_1 = " +
                     std::to_string(r_sequence.front()));
  }
  FragmentationTrace trace;
  trace.r_sequence = r_sequence;
  trace.q = q;
  trace.c = c;
  trace.seed = seed;
  trace.set_size = set_size_for(h, q, c);
  if (trace.set_size == 0) trace.warnings.push_back("floor(C q n) = 0: every W is empty");

  const auto n = static_cast<unsigned>(h.num_vertices());
  Rng rng(seed);
  Stage current = initial_stage(h);
  for (std::size_t i = 1; i < r_sequence.size(); ++i) {
    RoundRecord rec;
    rec.index = static_cast<unsigned>(i);
    rec.w = random_subset(rng, n, static_cast<unsigned>(trace.set_size));
    RoundResult res = refine_round(current, rec.w, r_sequence[i], r_sequence.size());
    rec.size_before = current.edges.size();
    rec.size_after = res.next.edges.size();
    rec.successful = res.successful;
    rec.parent = std::move(res.parent);
    rec.witness = std::move(res.witness);
    rec.next = std::move(res.next);
    current = rec.next;
    trace.rounds.push_back(std::move(rec));
    if (current.edges.empty()) {
      trace.status = TraceStatus::extinct;
      break;
    }
  }
  trace.final_stage = std::move(current);
  return trace;
}

std::vector<unsigned> tail_sequence(const std::vector<unsigned>& r_sequence, std::size_t i) {
  std::vector<unsigned> seq(r_sequence.begin() + static_cast<std::ptrdiff_t>(i - 1), r_sequence.end());
  if (seq.empty() || seq.back() > 1) seq.push_back(1);
  return seq;
}

const char* to_string(PreservationStatus s) {
  switch (s) {
    case PreservationStatus::pass: return "pass";
    case PreservationStatus::fail: return "fail";
    case PreservationStatus::not_applicable: return "not_applicable";
    case PreservationStatus::no_violation_found: return "no_violation_found";
  }
  return "?";
}

std::vector<PreservationEntry> check_spread_preservation(const Hypergraph& h, const FragmentationTrace& trace,
                                                         const Rational& q, std::uint64_t budget,
                                                         std::uint64_t samples) {
  const Stage first = initial_stage(h);
  std::vector<PreservationEntry> out;
  const Rational doubled = std::min(Rational(2 * q), Rational(1));
  for (std::size_t i = 1; i <= trace.rounds.size() + 1 && i <= trace.levels(); ++i) {
    PreservationEntry e;
    e.stage = i;
    e.r_sequence = tail_sequence(trace.r_sequence, i);
    e.q = doubled;
    const Stage& st = trace.stage(i, first);
    if (!trace.all_successful_before(i) || st.edges.empty()) {
      out.push_back(std::move(e));
      continue;
    }
    const SpreadProfile profile = SpreadProfile::tiered(doubled, e.r_sequence);
    CertResult r;
    try {
      r = certify_tiered(st.edges, profile, budget);
    } catch (const ResourceError&) {
      r = certify_profile_sampled(st.edges, profile, samples, trace.seed ^ i);
    }
    e.status = r.verdict == Verdict::pass   ? PreservationStatus::pass
               : r.verdict == Verdict::fail ? PreservationStatus::fail
                                            : PreservationStatus::no_violation_found;
    e.cert = std::move(r);
    out.push_back(std::move(e));
  }
  return out;
}

TraceCheck check_trace_invariants(const Hypergraph& h, const FragmentationTrace& trace, std::size_t max_exhaustive_n) {
  TraceCheck check;
  auto problem = [&](bool& flag, std::string msg) {
    flag = false;
    if (check.problems.size() < 16) check.problems.push_back(std::move(msg));
  };
  const Stage first = initial_stage(h);
  const std::size_t ell = trace.levels();
  VertexBits w_union{};
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    const RoundRecord& rec = trace.rounds[r];
    const Stage& st = rec.next;
    const std::size_t stage_index = r + 2;
    w_union = bits::unite(w_union, rec.w.bits());

    std::vector<bool> seen(h.size(), false);
    for (std::size_t a = 0; a < st.edges.size(); ++a) {
      const std::size_t orig = st.provenance[a];
      if (seen[orig]) problem(check.provenance_injective, "round " + std::to_string(rec.index) + ": provenance repeats edge " + std::to_string(orig));
      seen[orig] = true;
      if (!bits::is_subset(st.edges.edge_bits(a), h.edge_bits(orig))) {
        problem(check.provenance_contains, "round " + std::to_string(rec.index) + ": edge not inside its provenance");
      }
      if (st.edges.edge(a).size() != trace.r_sequence[r + 1]) {
        problem(check.uniform, "round " + std::to_string(rec.index) + ": edge size differs from r_next");
      }
      if (!bits::is_subset(h.edge_bits(st.transfer[a]), bits::unite(st.edges.edge_bits(a), w_union))) {
        problem(check.transfer, "round " + std::to_string(rec.index) + ": transfer edge escapes A ∪ W");
      }
    }

    if (trace.all_successful_before(stage_index)) {
      // |H_i| (2l)^(i-1) >= (2l-1)^(i-1) |H|  and  2 |H_i| >= |H|
      const BigInt lhs = BigInt(static_cast<unsigned long>(st.edges.size())) * pow(BigInt(static_cast<unsigned long>(2 * ell)), static_cast<unsigned>(stage_index - 1));
      const BigInt rhs = BigInt(static_cast<unsigned long>(h.size())) * pow(BigInt(static_cast<unsigned long>(2 * ell - 1)), static_cast<unsigned>(stage_index - 1));
      if (lhs < rhs || 2 * st.edges.size() < h.size()) {
        problem(check.size_product, "stage " + std::to_string(stage_index) + ": successful prefix lost too many edges");
      }
    }

    if (h.num_vertices() <= max_exhaustive_n) {
      const auto n = static_cast<unsigned>(h.num_vertices());
      std::vector<Count> ha(n + 1), hi(n + 1);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        const VertexBits a{mask, 0, 0, 0};
        const unsigned s = bits::count(a);
        std::span<Count> pa(ha.data(), s + 1), pi(hi.data(), s + 1);
        intersection_profile(h, a, pa);
        intersection_profile(st.edges, a, pi);
        tail_sums(pa);
        tail_sums(pi);
        for (unsigned j = 0; j <= s; ++j) {
          if (pi[j] > pa[j]) {
            problem(check.m_monotone, "stage " + std::to_string(stage_index) + ": M_j grew for " + VertexSet::from_bits(a).to_string());
            break;
          }
        }
      }
    }
  }
  (void)first;
  return check;
}

FailureFrequency round_failure_frequency(const Hypergraph& h, const std::vector<unsigned>& r_sequence,
                                         const Rational& q, const Rational& c, std::uint64_t runs,
                                         std::uint64_t seed) {
  validate_sequence(r_sequence);
  if (r_sequence.size() < 2) throw InputError("round failure needs at least two levels");
  FailureFrequency f;
  const double ell = static_cast<double>(r_sequence.size());
  f.bound = 6.0 * ell * std::pow(c.get_d() / 4.0, -static_cast<double>(r_sequence[1]) / 2.0);
  f.vacuous = f.bound >= 1.0;
  if (c * q > Rational(1, 2)) {
    if (!f.vacuous) throw InputError("p = C q exceeds 1/2");
    f.holds = true;
    return f;
  }
  const FragmentationTrace probe = run_fragmentation(h, {r_sequence[0], r_sequence[1]}, q, c, seed);
  (void)probe;  // validates the inputs once

  const Stage first = initial_stage(h);
  const auto n = static_cast<unsigned>(h.num_vertices());
  const std::size_t set_size = set_size_for(h, q, c);
  std::uint64_t failures = 0;
  const auto total = static_cast<std::int64_t>(runs);
#pragma omp parallel for reduction(+ : failures) schedule(dynamic, 8)
  for (std::int64_t i = 0; i < total; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const VertexSet w = random_subset(rng, n, static_cast<unsigned>(set_size));
    const RoundResult r = refine_round(first, w, r_sequence[1], r_sequence.size());
    failures += r.successful ? 0 : 1;
  }
  f.executed = true;
  f.runs = runs;
  f.failures = failures;
  f.frequency = runs ? static_cast<double>(failures) / static_cast<double>(runs) : 0.0;
  f.standard_error = runs ? std::sqrt(f.frequency * (1 - f.frequency) / static_cast<double>(runs)) : 0.0;
  f.holds = f.vacuous || f.frequency <= f.bound + 3 * f.standard_error;
  return f;
}

namespace {

json stage_json(const Stage& s) {
  return json{{"edges", to_json(s.edges)["edges"]}, {"provenance", s.provenance}, {"transfer", s.transfer}};
}

}  // namespace

json to_json(const FragmentationTrace& t) {
  json rounds = json::array();
  for (const auto& r : t.rounds) {
    rounds.push_back(json{{"index", r.index},
                          {"W", to_json(r.w)},
                          {"size_before", r.size_before},
                          {"size_after", r.size_after},
                          {"successful", r.successful},
                          {"next", stage_json(r.next)},
                          {"parent", r.parent},
                          {"witness", r.witness}});
  }
  return json{{"r_sequence", t.r_sequence},
              {"q", to_json(t.q)},
              {"C", to_json(t.c)},
              {"rng_seed", t.seed},
              {"set_size", t.set_size},
              {"levels", t.levels()},
              {"rounds", std::move(rounds)},
              {"final_hypergraph", to_json(t.final_stage.edges)},
              {"final_provenance", t.final_stage.provenance},
              {"status", t.status == TraceStatus::completed ? "completed" : "extinct"},
              {"warnings", t.warnings}};
}

json to_json(const PreservationEntry& e) {
  json j{{"stage", e.stage}, {"status", to_string(e.status)}, {"r_sequence", e.r_sequence}, {"q", to_json(e.q)}};
  if (e.cert) j["certificate"] = to_json(*e.cert);
  return j;
}

}  // namespace spreadlab
