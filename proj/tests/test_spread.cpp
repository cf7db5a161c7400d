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

#include <algorithm>

#include "fixtures.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/generators.hpp"
#include "spreadlab/reference.hpp"
#include "spreadlab/spread.hpp"

using namespace spreadlab;
using fixtures::make;
using fixtures::pairs;
using fixtures::rat;
using fixtures::vs;

namespace {

// Every strictly decreasing sequence from r1 down to 1 with at most `levels` entries.
std::vector<std::vector<unsigned>> sequences_ending_in_one(unsigned r1, unsigned levels) {
  std::vector<std::vector<unsigned>> out;
  if (r1 == 1) {
    out.push_back({1});
    return out;
  }
  out.push_back({r1, 1});
  if (levels >= 3) {
    for (unsigned mid = 2; mid < r1; ++mid) out.push_back({r1, mid, 1});
  }
  return out;
}

std::vector<std::vector<unsigned>> halving_sequences(unsigned r1, unsigned levels) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur{r1};
  auto extend = [&](auto&& self) -> void {
    if (cur.size() >= 2) out.push_back(cur);
    if (cur.size() == levels) return;
    const unsigned last = cur.back();
    for (unsigned next = (last + 1) / 2; next < last; ++next) {
      if (next == 0) continue;
      cur.push_back(next);
      self(self);
      cur.pop_back();
    }
  };
  extend(extend);
  return out;
}

}  // namespace

TEST_SUITE("spread") {
  TEST_CASE("q-spread on the pairs of four vertices") {
    const Hypergraph k4 = pairs(4);
    CHECK(certify_q_spread(k4, Rational(1)).passed());
    CHECK(certify_q_spread(k4, rat(1, 2)).passed());
    const CertResult r = certify_q_spread(k4, rat(2, 5));
    REQUIRE(r.verdict == Verdict::fail);
    REQUIRE(r.witness);
    CHECK(r.witness->set == vs({0}));
    CHECK(r.witness->lhs == 3);
    CHECK(r.witness->rhs == rat(12, 5));
    CHECK(recheck_witness(k4, *r.witness));
  }

  TEST_CASE("tiered spread on the pairs of four vertices") {
    const Hypergraph k4 = pairs(4);
    CHECK(certify_tiered(k4, SpreadProfile::tiered(rat(5, 6), {2, 1})).passed());
    const CertResult r = certify_tiered(k4, SpreadProfile::tiered(rat(1, 2), {2, 1}));
    REQUIRE(r.witness);
    CHECK(r.witness->set == vs({0, 1}));
    CHECK(r.witness->j == 1);
    CHECK(r.witness->lhs == 5);
    CHECK(r.witness->rhs == Rational(3));
    CHECK(certify_tiered(k4, SpreadProfile::tiered(rat(1, 100), {2})).passed());
  }

  TEST_CASE("multi-level spread matches tiered when the q are equal") {
    const Hypergraph k4 = pairs(4);
    CHECK(certify_multilevel(k4, SpreadProfile::levels({rat(5, 6)}, {2, 1})).passed());
    const CertResult r = certify_multilevel(k4, SpreadProfile::levels({rat(1, 2)}, {2, 1}));
    REQUIRE(r.witness);
    CHECK(r.witness->set == vs({0, 1}));
    CHECK(r.witness->j == 1);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Hypergraph h = random_hypergraph(8, 4, 10, seed);
      for (const Rational& q : {rat(1, 3), rat(1, 2), rat(3, 4)}) {
        const CertResult a = certify_tiered(h, SpreadProfile::tiered(q, {4, 2, 1}));
        const CertResult b = certify_multilevel(h, SpreadProfile::levels({q, q}, {4, 2, 1}));
        CHECK(a.verdict == b.verdict);
        if (a.witness && b.witness) CHECK(a.witness->set == b.witness->set);
      }
    }
  }

  TEST_CASE("multi-level levels use their own q") {
    const Hypergraph h = complete_uniform(6, 3);
    CHECK(certify_multilevel(h, SpreadProfile::levels({Rational(1), Rational(1)}, {3, 2, 1})).passed());
    const CertResult low = certify_multilevel(h, SpreadProfile::levels({Rational(1), rat(1, 100)}, {3, 2, 1}));
    REQUIRE(low.witness);
    CHECK(low.witness->level == 1);
    const CertResult high = certify_multilevel(h, SpreadProfile::levels({rat(1, 100), Rational(1)}, {3, 2, 1}));
    REQUIRE(high.witness);
    CHECK(high.witness->level == 0);
  }

  TEST_CASE("profile validation") {
    CHECK_THROWS_AS(SpreadProfile::tiered(rat(1, 2), {2, 2}).validate(), InputError);
    CHECK_THROWS_AS(SpreadProfile::tiered(Rational(0), {2, 1}).validate(), InputError);
    CHECK_THROWS_AS(SpreadProfile::tiered(rat(3, 2), {2, 1}).validate(), InputError);
    CHECK_THROWS_AS(SpreadProfile::levels({rat(1, 2)}, {3, 2, 1}).validate(), InputError);
    CHECK_THROWS_AS(certify_q_spread(Hypergraph(3, {}), rat(1, 2)), InputError);
    // Edge of size 3 is not 2-bounded.
    CHECK_THROWS_AS(certify_tiered(make(4, {{0, 1, 2}}), SpreadProfile::tiered(rat(1, 2), {2, 1})),
                    PreconditionError);
  }

  TEST_CASE("budget refusal") {
    CHECK_THROWS_AS(certify_q_spread(hamilton_squares(7), rat(1, 2), 1000), ResourceError);
    const CertResult s = certify_q_spread_sampled(pairs(6), rat(1, 2), 200, 3);
    CHECK(s.verdict == Verdict::no_violation_found);
    CHECK(s.samples == 200);
    const CertResult f = certify_q_spread_sampled(pairs(6), rat(1, 4), 200, 3);
    CHECK(f.verdict == Verdict::fail);
    REQUIRE(f.witness);
    CHECK(recheck_witness(pairs(6), *f.witness));
  }

  TEST_CASE("minimal q") {
    const MinSpread k4 = min_q_spread(pairs(4));
    CHECK(k4.q.exact() == rat(1, 2));
    REQUIRE(k4.witness);
    CHECK(k4.witness->size() == 1);
    CHECK(min_q_spread(pairs(6)).q.exact() == rat(1, 3));
    CHECK(min_q_spread(make(1, {{0}})).q.exact() == Rational(1));

    const MinSpread t4 = min_q_tiered(pairs(4), {2, 1});
    CHECK(t4.q.exact() == rat(5, 6));
    CHECK(t4.witness == vs({0, 1}));
    CHECK(t4.j == 1);
    CHECK(min_q_tiered(pairs(6), {2, 1}).q.exact() == rat(9, 15));
    const MinSpread none = min_q_tiered(pairs(4), {2});
    CHECK(none.q.count == 0);
    CHECK_FALSE(none.witness);
  }

  TEST_CASE("irrational minimal q is bracketed") {
    // (1/6)^(1/2) for a lone pair edge among six distinct pairs, singletons tie lower.
    const RootRatio r{1, 15, 2};
    CHECK_FALSE(r.exact());
    const Rational up = r.upper(1 << 20), down = r.strictly_below(1 << 20);
    CHECK(up * up >= rat(1, 15));
    CHECK(down * down < rat(1, 15));
    CHECK(up - down == rat(1, 1L << 20));
  }

  TEST_CASE("certification agrees with the brute-force reference") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const unsigned n = 5 + static_cast<unsigned>(seed % 4);
      const unsigned r = 2 + static_cast<unsigned>(seed % 3);
      const Hypergraph h = random_hypergraph(n, r, 3 + seed % 8, seed);
      const MinSpread m = min_q_spread(h);
      CHECK(compare(m.q, reference::min_q_spread(h)) == 0);
      for (const Rational& q : {rat(1, 4), rat(2, 5), rat(1, 2), rat(2, 3), rat(9, 10)}) {
        const CertResult c = certify_q_spread(h, q);
        CHECK(c.passed() == reference::is_q_spread(h, q));
        if (c.witness) CHECK(recheck_witness(h, *c.witness));
        for (const auto& seq : sequences_ending_in_one(r, 3)) {
          const SpreadProfile p = SpreadProfile::tiered(q, seq);
          const CertResult t = certify_tiered(h, p);
          CHECK(t.passed() == reference::is_profile_spread(h, p));
          if (t.witness) CHECK(recheck_witness(h, *t.witness));
        }
      }
    }
  }

  TEST_CASE("certification is monotone in q") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Hypergraph h = random_hypergraph(8, 3, 9, seed);
      bool passed = false;
      for (int num = 1; num <= 20; ++num) {
        const bool now = certify_tiered(h, SpreadProfile::tiered(rat(num, 20), {3, 2, 1})).passed();
        CHECK((!passed || now));
        passed = now;
      }
      CHECK(passed);
    }
  }

  TEST_CASE("tiered spread with a trailing 1 implies q-spread") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const unsigned r = 2 + static_cast<unsigned>(seed % 3);
      const Hypergraph h = random_hypergraph(8, r, 4 + seed % 9, seed);
      for (const auto& seq : sequences_ending_in_one(r, 3)) {
        const Rational q = min_q_tiered(h, seq).q.upper(1 << 20);
        REQUIRE(certify_tiered(h, SpreadProfile::tiered(q, seq)).passed());
        CHECK(certify_q_spread(h, q).passed());
      }
    }
  }

  TEST_CASE("q-spread implies tiered spread at 4q for halving sequences") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const unsigned r = 2 + static_cast<unsigned>(seed % 4);
      const Hypergraph h = random_hypergraph(9, r, 4 + seed % 9, seed);
      const Rational q = min_q_spread(h).q.upper(1 << 20);
      REQUIRE(certify_q_spread(h, q).passed());
      const Rational q4 = std::min(Rational(4 * q), Rational(1));
      for (const auto& seq : halving_sequences(r, 3)) CHECK(certify_tiered(h, SpreadProfile::tiered(q4, seq)).passed());
    }
  }

  TEST_CASE("certification is deterministic across thread counts") {
    const Hypergraph h = random_hypergraph(12, 5, 40, 9);
    const CertResult a = certify_q_spread(h, rat(1, 5));
    const CertResult b = certify_q_spread(h, rat(1, 5));
    REQUIRE(a.witness);
    CHECK(a.witness->set == b.witness->set);
    CHECK(a.witness->set == candidate_sets(h, a.witness->set.size(), a.witness->set.size()).front());
  }

  TEST_CASE("minimal q of complete uniform hypergraphs is r/n") {
    for (unsigned n = 2; n <= 10; ++n) {
      for (unsigned r = 1; r <= n; ++r) CHECK(min_q_spread(complete_uniform(n, r)).q.exact() == rat(r, n));
    }
  }
}
