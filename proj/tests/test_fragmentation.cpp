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

#include <doctest.h>

#include "fixtures.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/fragmentation.hpp"
#include "spreadlab/generators.hpp"
#include "spreadlab/spread.hpp"

using namespace spreadlab;
using fixtures::make;
using fixtures::pairs;
using fixtures::rat;
using fixtures::vs;

TEST_SUITE("fragmentation") {
  TEST_CASE("k-good pairs") {
    const Hypergraph k4 = pairs(4);
    const GoodnessVerdict inside = is_k_good(k4, vs({0, 1}), vs({0, 1}), 0);
    CHECK(inside.good);
    CHECK(inside.witness_edge == vs({0, 1}));
    CHECK(inside.residual.empty());
    CHECK(is_k_good(k4, vs({0, 1}), vs({3}), 2).good);
    CHECK_FALSE(is_k_good(k4, vs({0, 1}), vs({2}), 0).good);
    const GoodnessVerdict one = is_k_good(k4, vs({0, 1}), vs({2}), 1);
    REQUIRE(one.good);
    // {0,2} and {1,2} both leave one vertex outside W; {0,2} is lexicographically first.
    CHECK(one.witness_edge == vs({0, 2}));
    CHECK(one.residual == vs({0}));
    CHECK_THROWS_AS(is_k_good(k4, vs({0, 4}), vs({2}), 1), InputError);
    CHECK_THROWS_AS(is_k_good(make(4, {{0, 1}}), vs({0, 2}), vs({2}), 1), InputError);
  }

  TEST_CASE("witnesses satisfy the definition") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Hypergraph h = random_hypergraph(9, 4, 12, seed);
      const VertexSet w = vs({0, 2, 3, 7});
      for (std::size_t s = 0; s < h.size(); ++s) {
        for (unsigned k = 0; k <= 4; ++k) {
          const GoodnessVerdict v = is_k_good(h, s, w, k);
          bool expected = false;
          for (const auto& e : h.edges()) {
            std::size_t outside = 0;
            bool covered = true;
            for (Vertex x : e) {
              if (!w.contains(x)) ++outside;
              if (!w.contains(x) && !h.edge(s).contains(x)) covered = false;
            }
            expected = expected || (covered && outside <= k);
          }
          CHECK(v.good == expected);
          if (v.good) {
            CHECK(v.residual.size() <= k);
            for (Vertex x : v.witness_edge) CHECK((w.contains(x) || h.edge(s).contains(x)));
          }
        }
      }
    }
  }

  TEST_CASE("refinement rounds") {
    const Stage k6 = initial_stage(pairs(6));
    for (const VertexSet& w : {vs({3}), vs({0, 5}), vs({1, 2, 4})}) {
      const RoundResult r = refine_round(k6, w, 1, 2);
      CHECK(r.next.edges.size() == 15);
      CHECK(r.successful);
    }
    const Hypergraph k53 = complete_uniform(5, 3);
    const RoundResult all = refine_round(initial_stage(k53), vs({0, 1, 2, 3, 4}), 2, 3);
    CHECK(all.next.edges.size() == 10);
    for (std::size_t i = 0; i < all.next.edges.size(); ++i) {
      const VertexSet& s = k53.edge(all.parent[i]);
      CHECK(all.next.edges.edge(i) == vs({s[0], s[1]}));
    }
    const RoundResult dead = refine_round(initial_stage(make(5, {{0, 1}, {2, 3}})), vs({4}), 1, 2);
    CHECK(dead.next.edges.empty());
    CHECK_FALSE(dead.successful);
    CHECK_THROWS_AS(refine_round(k6, vs({1}), 2, 2), InputError);
  }

  TEST_CASE("success predicate") {
    // Four edges, l = 2: keeping 3 of 4 is exactly (1 - 1/4).
    const Stage s = initial_stage(make(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
    CHECK(refine_round(s, vs({0, 2, 4}), 1, 2).successful);
    CHECK_FALSE(refine_round(s, vs({0, 2}), 1, 2).successful);
  }

  TEST_CASE("fragmentation traces") {
    const FragmentationTrace t = run_fragmentation(pairs(6), {2, 1}, rat(1, 8), Rational(4), 11);
    CHECK(t.set_size == 3);
    REQUIRE(t.rounds.size() == 1);
    CHECK(t.rounds[0].size_after == 15);
    CHECK(t.rounds[0].successful);
    CHECK(t.status == TraceStatus::completed);
    CHECK(to_json(t).dump() == to_json(run_fragmentation(pairs(6), {2, 1}, rat(1, 8), Rational(4), 11)).dump());
    CHECK_THROWS_AS(run_fragmentation(pairs(6), {2, 1}, rat(1, 4), Rational(4), 1), InputError);
    CHECK_THROWS_AS(run_fragmentation(make(4, {{0}, {1, 2}}), {2, 1}, rat(1, 8), Rational(4), 1), InputError);
    CHECK_THROWS_AS(run_fragmentation(pairs(6), {3, 1}, rat(1, 8), Rational(4), 1), InputError);

    const FragmentationTrace tiny = run_fragmentation(pairs(6), {2, 1}, rat(1, 100), Rational(4), 1);
    CHECK(tiny.set_size == 0);
    CHECK(tiny.warnings.size() == 1);
  }

  TEST_CASE("a lone edge survives when W covers it") {
    const Hypergraph h = make(4, {{0, 1, 2}});
    const RoundResult r = refine_round(initial_stage(h), vs({0, 1, 2, 3}), 1, 3);
    CHECK(r.successful);
    CHECK(r.next.edges.edge(0) == vs({0}));
  }

  TEST_CASE("trace invariants hold over many seeds") {
    const Hypergraph h = complete_uniform(8, 4);
    const Rational q = min_q_tiered(h, {4, 2, 1}).q.upper(1 << 20);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const FragmentationTrace t = run_fragmentation(h, {4, 2, 1}, q, rat(1, 2) / q, seed);
      const TraceCheck c = check_trace_invariants(h, t);
      CHECK(c.ok());
      for (const auto& p : c.problems) MESSAGE(p);
    }
  }

  TEST_CASE("transfer edges lie inside A plus the used W") {
    const Hypergraph h = random_hypergraph(10, 5, 30, 4);
    const FragmentationTrace t = run_fragmentation(h, {5, 3, 2}, rat(1, 10), Rational(4), 8);
    VertexBits used{};
    for (const auto& round : t.rounds) {
      used = bits::unite(used, round.w.bits());
      for (std::size_t a = 0; a < round.next.edges.size(); ++a) {
        const VertexBits origin = h.edge_bits(round.next.transfer[a]);
        CHECK(bits::is_subset(origin, bits::unite(round.next.edges.edge_bits(a), used)));
      }
    }
  }

  TEST_CASE("spread preservation") {
    const Hypergraph h = complete_uniform(8, 3);
    const Rational q = min_q_tiered(h, {3, 2, 1}).q.upper(1 << 20);
    const FragmentationTrace t = run_fragmentation(h, {3, 2, 1}, q, rat(1, 2) / q, 3);
    const auto report = check_spread_preservation(h, t, q);
    REQUIRE(!report.empty());
    CHECK(report[0].status == PreservationStatus::pass);
    for (const auto& e : report) {
      if (t.all_successful_before(e.stage)) CHECK(e.status == PreservationStatus::pass);
      else CHECK(e.status == PreservationStatus::not_applicable);
    }

    const Stage s = initial_stage(make(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}}));
    FragmentationTrace bad;
    bad.r_sequence = {2, 1};
    RoundRecord rec;
    rec.index = 1;
    const RoundResult rr = refine_round(s, vs({0}), 1, 2);
    rec.successful = rr.successful;
    rec.next = rr.next;
    bad.rounds.push_back(rec);
    const auto gated = check_spread_preservation(s.edges, bad, rat(1, 2));
    REQUIRE(gated.size() == 2);
    CHECK(gated[1].status == PreservationStatus::not_applicable);
  }

  TEST_CASE("round failure frequency") {
    const FailureFrequency vac = round_failure_frequency(complete_uniform(10, 3), {3, 1}, rat(3, 10), Rational(8), 2000, 1);
    CHECK(vac.vacuous);
    CHECK_FALSE(vac.executed);
    CHECK(vac.holds);
    CHECK(vac.bound == doctest::Approx(12 / std::sqrt(2.0)));

    const FailureFrequency run = round_failure_frequency(pairs(12), {2, 1}, rat(1, 48), Rational(24), 300, 2);
    CHECK(run.executed);
    CHECK(run.runs == 300);
    CHECK(run.bound == doctest::Approx(12 / std::sqrt(6.0)));
    const FailureFrequency again = round_failure_frequency(pairs(12), {2, 1}, rat(1, 48), Rational(24), 300, 2);
    CHECK(again.failures == run.failures);
  }
}
