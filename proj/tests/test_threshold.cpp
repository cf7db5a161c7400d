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

#include <cmath>

#include "fixtures.hpp"
#include "spreadlab/bounds.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/generators.hpp"
#include "spreadlab/reference.hpp"
#include "spreadlab/spread.hpp"
#include "spreadlab/threshold.hpp"

using namespace spreadlab;
using fixtures::make;
using fixtures::pairs;
using fixtures::rat;
using fixtures::vs;

TEST_SUITE("threshold") {
  TEST_CASE("wilson interval") {
    const auto [lo, hi] = wilson_interval(50, 100, 0.95);
    CHECK(lo == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(hi == doctest::Approx(0.5962).epsilon(1e-3));
    const auto [lo0, hi0] = wilson_interval(0, 10, 0.95);
    CHECK(lo0 == 0.0);
    CHECK(hi0 > 0.0);
    const auto [lo1, hi1] = wilson_interval(10, 10, 0.95);
    CHECK(hi1 == 1.0);
    CHECK(lo1 < 1.0);
  }

  TEST_CASE("containment estimates at the extremes") {
    const Hypergraph k4 = pairs(4);
    CHECK(estimate_containment(k4, 4, 50, 1).p_hat == 1.0);
    CHECK(estimate_containment(make(6, {{0, 1, 2, 3}}), 3, 50, 1).p_hat == 0.0);
    CHECK_THROWS_AS(estimate_containment(k4, 5, 10, 1), InputError);
    const ThresholdEstimate pm = estimate_containment(perfect_matchings(4), 3, 20000, 5);
    CHECK(pm.p_hat == doctest::Approx(0.6).epsilon(0.03));
    CHECK(pm.lo <= pm.p_hat);
    CHECK(pm.p_hat <= pm.hi);
  }

  TEST_CASE("estimates match the serial reference exactly") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Hypergraph h = random_hypergraph(12, 3, 8, seed);
      for (std::size_t s : {3, 6, 9}) {
        CHECK(estimate_containment(h, s, 500, seed).successes == reference::containment_successes(h, s, 500, seed));
      }
    }
  }

  TEST_CASE("exact containment") {
    const Hypergraph pm4 = perfect_matchings(4);
    CHECK(exact_containment(pm4, 3).probability == rat(3, 5));
    CHECK(exact_containment(pm4, 2).probability == rat(3, 15));
    CHECK(exact_containment(pm4, 6).probability == 1);
    CHECK(exact_containment(pairs(4), 2).probability == 1);
    CHECK(exact_containment(pm4, 3, 1).method == ExactMethod::inclusion_exclusion);
    CHECK_THROWS_AS(exact_containment(complete_uniform(12, 6), 6, 10), ResourceError);
  }

  TEST_CASE("both exact routes agree with the reference") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      const Hypergraph h = random_hypergraph(10 + seed % 4, 2 + seed % 4, 2 + seed % 12, seed);
      Rational prev = 0;
      for (std::size_t s = 0; s <= h.num_vertices(); ++s) {
        const Rational a = containment_by_enumeration(h, s);
        CHECK(a == containment_by_inclusion_exclusion(h, s));
        CHECK(a == reference::exact_containment(h, s));
        CHECK(a >= prev);
        prev = a;
      }
    }
  }

  TEST_CASE("threshold scans") {
    const Hypergraph pm4 = perfect_matchings(4);
    const auto rows = threshold_scan(pm4, {1, 2, 3, 4, 5, 6}, 4000, 9);
    REQUIRE(rows.size() == 6);
    CHECK(rows.front().p_hat == 0.0);
    CHECK(rows.back().p_hat == 1.0);
    for (const auto& row : rows) {
      const double exact = exact_containment(pm4, row.set_size).probability.get_d();
      CHECK(std::abs(row.p_hat - exact) <= 4 * std::sqrt(exact * (1 - exact) / 4000) + 1e-12);
    }
    CHECK_THROWS_AS(threshold_scan(pm4, {3, 2}, 10, 1), InputError);
  }

  TEST_CASE("endgame sampling") {
    const Hypergraph h = make(8, {{2}, {0, 1}});
    FragmentationTrace t;
    t.final_stage = initial_stage(h);
    const double exact = exact_containment(h, 3).probability.get_d();
    const ThresholdEstimate e = endgame_sample(t, 3, 20000, 4);
    CHECK(std::abs(e.p_hat - exact) < 0.02);
    CHECK(endgame_sample(t, 8, 100, 4).p_hat == 1.0);
    t.status = TraceStatus::extinct;
    t.final_stage = initial_stage(Hypergraph(8, {}));
    const ThresholdEstimate dead = endgame_sample(t, 3, 100, 4);
    CHECK(dead.extinct);
    CHECK(dead.p_hat == 0.0);
  }
}

TEST_SUITE("bounds") {
  TEST_CASE("fragmentation bounds") {
    BoundParams p;
    p.levels = 2;
    p.r_sequence = {6, 3};
    double prev = -1e9;
    for (double c : {8.0, 16.0, 64.0, 1e3, 1e5, 1e8}) {
      p.c = c;
      const BoundSet b = evaluate_bounds(p);
      const BoundValue* uniform = b.find("fragmentation_uniform_endgame");
      REQUIRE(uniform);
      CHECK(uniform->applicable);
      CHECK(uniform->raw > prev);
      CHECK(uniform->raw < 1.0);
      prev = uniform->raw;
    }
    CHECK(prev == doctest::Approx(1.0).epsilon(1e-4));
    p.c = 4;
    CHECK_FALSE(evaluate_bounds(p).find("fragmentation_uniform_endgame")->applicable);
    p.c = 8;
    const BoundSet b = evaluate_bounds(p);
    // 4 r_1 = 24 > C l = 16, while 4 r_2 = 12 fits.
    CHECK_FALSE(b.find("fragmentation_small_endgame", 1)->applicable);
    CHECK(b.find("fragmentation_small_endgame", 2)->applicable);
    CHECK(b.find("fragmentation_small_endgame", 2)->raw ==
          doctest::Approx(1 - 6 * 4 * std::pow(2.0, -1.5) - 2 * std::exp(-16.0 / 12)));
  }

  TEST_CASE("single-set bounds") {
    BoundParams p;
    p.q = 0.05;
    p.alpha = 0.2;
    p.n = 40;
    p.r = 2;
    const BoundSet b = evaluate_bounds(p);
    CHECK(b.find("small_edges")->applicable);
    CHECK(b.find("small_edges")->raw == doctest::Approx(1 - 2 * std::exp(-1.0)));
    const BoundValue* sm = b.find("second_moment");
    CHECK(sm->applicable);
    CHECK(sm->value == 0.0);
    CHECK(sm->clamped);
    CHECK(sm->raw == doctest::Approx(1 - 1 - 2 * std::exp(-2.0)));
    p.alpha = 0.1;
    CHECK_FALSE(evaluate_bounds(p).find("second_moment")->applicable);
    CHECK_FALSE(evaluate_bounds(p).find("small_edges")->applicable);
  }

  TEST_CASE("constant-dependent bounds need K0") {
    BoundParams p;
    p.c = 10;
    p.levels = 3;
    p.r_sequence = {5, 3, 2};
    CHECK(evaluate_bounds(p).find("nonuniform_conditional") == nullptr);
    p.k0 = 5;
    p.q_levels = {0.1, 0.05, 0.05};
    const BoundSet b = evaluate_bounds(p);
    const BoundValue* t = b.find("nonuniform_conditional");
    REQUIRE(t);
    CHECK(t->conditional);
    CHECK(t->raw == doctest::Approx(1 - 5.0 / 30));
    const BoundValue* m = b.find("multilevel_conditional");
    REQUIRE(m);
    CHECK(m->raw == doctest::Approx(1 - 5 * std::log(4.0) / (10 * 2.0)));
    p.k0 = 20;
    CHECK_FALSE(evaluate_bounds(p).find("nonuniform_conditional")->applicable);
  }

  TEST_CASE("estimates respect the applicable bounds") {
    struct Instance {
      Hypergraph h;
      std::vector<unsigned> r_sequence;
    };
    const std::vector<Instance> suite{{complete_uniform(24, 1), {1}},
                                      {complete_uniform(16, 2), {2, 1}},
                                      {complete_uniform(12, 3), {3, 1}},
                                      {perfect_matchings(6), {3, 1}}};
    int nonvacuous = 0;
    for (const auto& inst : suite) {
      const Hypergraph& h = inst.h;
      const double n = static_cast<double>(h.num_vertices());
      const double q = min_q_spread(h).q.upper(1 << 20).get_d();
      for (std::size_t s = 1; s < h.num_vertices(); ++s) {
        BoundParams p;
        p.q = q;
        p.alpha = static_cast<double>(s) / n;
        p.n = h.num_vertices();
        p.r_sequence = inst.r_sequence;
        const BoundSet b = evaluate_bounds(p);
        const ThresholdEstimate e = estimate_containment(h, s, 4000, s);
        for (const auto& v : b.values) {
          if (!v.applicable || v.value >= 1.0) continue;
          if (v.value > 0) ++nonvacuous;
          CHECK(e.p_hat + 3 * e.standard_error >= v.value);
        }
      }
    }
    CHECK(nonvacuous > 0);
  }
}
