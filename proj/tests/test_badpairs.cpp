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
#include "spreadlab/badpairs.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/generators.hpp"
#include "spreadlab/reference.hpp"

using namespace spreadlab;
using fixtures::make;
using fixtures::pairs;
using fixtures::rat;
using fixtures::vs;

TEST_SUITE("badpairs") {
  TEST_CASE("bound formula") {
    const RadicalRational b = lemma21_bound(20, 10, 2, Rational(8), 10);
    CHECK(b.radicand == 1);
    CHECK(b.coef == 1385670);
    CHECK(lemma21_bound(20, 10, 0, Rational(8), 10).coef == 3 * 10 * 184756);
    CHECK(lemma21_bound(12, 5, 2, Rational(4), 7).coef == rat(3, 2) * 7 * 792);
    const RadicalRational odd = lemma21_bound(6, 4, 1, Rational(4), 15);
    CHECK(odd.coef == 3 * 15 * 15);
    CHECK(odd.radicand == rat(1, 2));
    CHECK_THROWS_AS(lemma21_bound(6, 4, 1, Rational(3), 15), InputError);
  }

  TEST_CASE("hypothesis gate") {
    BadPairParams p;
    p.c = 4;
    p.q = rat(1, 8);
    p.k = 1;
    p.pn = 2;
    CHECK_THROWS_AS(count_bad_pairs(pairs(4), p), PreconditionError);
    CHECK_NOTHROW(count_bad_pairs(pairs(4), p, false));
    p.pn = 5;
    CHECK_THROWS_AS(count_bad_pairs(pairs(4), p, false), InputError);
  }

  TEST_CASE("a lone edge is never bad at k = r") {
    const Hypergraph h = make(6, {{1, 3, 4}});
    for (unsigned pn = 3; pn <= 6; ++pn) {
      BadPairParams p;
      p.k = 3;
      p.pn = pn;
      CHECK(count_bad_pairs(h, p, false).total == 0);
    }
  }

  TEST_CASE("pairs of six vertices with pn = 4") {
    BadPairParams p;
    p.c = 4;
    p.q = rat(1, 8);
    p.k = 1;
    p.pn = 4;
    const BadPairReport r = count_bad_pairs(pairs(6), p, false);
    // Any W of size 4 already contains a pair, so every (S, W) is good.
    CHECK(r.total == 0);
    CHECK(r.within_bound);
    CHECK(r.bound.coef == 3 * 15 * 15);
    CHECK(r.bound.radicand == rat(1, 2));
    CHECK(r.hypotheses.c_at_least_4);
    CHECK(r.hypotheses.p_at_most_half);
    CHECK(r.hypotheses.pn_at_least_2r);
    CHECK_FALSE(r.hypotheses.literal);
    CHECK_FALSE(r.hypotheses.certified);
  }

  TEST_CASE("counts match the definition-level reference") {
    const std::vector<Hypergraph> cases{perfect_matchings(6), copies_of(make(3, {{0, 1}, {0, 2}, {1, 2}}), 5),
                                        random_hypergraph(10, 3, 12, 1), random_hypergraph(9, 4, 10, 2),
                                        random_hypergraph(8, 2, 6, 3)};
    for (const Hypergraph& h : cases) {
      const unsigned r = uniformity(h).max_size;
      for (unsigned k = 1; k < r; ++k) {
        for (unsigned pn = 1; pn + r <= h.num_vertices() && pn <= 7; pn += 2) {
          BadPairParams p;
          p.c = 4;
          p.q = rat(1, 8);
          p.k = k;
          p.pn = pn;
          const BadPairReport rep = count_bad_pairs(h, p, false);
          std::vector<RadicalRational> thresholds(r + 1);
          for (const auto& row : rep.rows) thresholds[row.t] = row.n_threshold;
          const auto ref = reference::count_bad_pairs(h, k, pn, thresholds);
          for (const auto& row : rep.rows) {
            CHECK(row.bad == ref.bad[row.t]);
            CHECK(row.pathological == ref.pathological[row.t]);
          }
          CHECK(rep.counting_checks_hold());
        }
      }
    }
  }

  TEST_CASE("pathological sets") {
    const Hypergraph h = perfect_matchings(6);
    const RadicalRational n = pathology_threshold(15, 3, 4, 1, Rational(4), 15);
    const PathologyVerdict empty = is_pathological(h, vs({0, 1, 2, 3, 4, 5, 6}), 1, 4, n);
    // Labels 0..6 never touch vertex 5 of K_6, so no perfect matching fits.
    CHECK(empty.count == 0);
    CHECK_FALSE(empty.pathological);
    CHECK_THROWS_AS(is_pathological(h, vs({0, 1}), 1, 4, n), InputError);
    const RadicalRational huge = RadicalRational::rational(Rational(15));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Hypergraph g = random_hypergraph(9, 3, 15, seed);
      const PathologyVerdict v = is_pathological(g, vs({0, 1, 2, 4, 5, 7}), 1, 3, huge);
      CHECK_FALSE(v.pathological);
    }
  }

  TEST_CASE("expectation in closed form") {
    const Hypergraph k6 = pairs(6);
    CHECK(expected_S(k6, vs({0, 1}), 2, 0) == 6);
    CHECK(expected_S_oracle(k6, vs({0, 1}), 2, 0) == 6);
    const Hypergraph rep = make(5, {{0, 1}, {0, 1}, {2, 3}});
    CHECK(expected_S(rep, vs({0, 1}), 0, 0) == 2);
    CHECK(expected_S(k6, vs({0, 1}), 3, 3) == 0);
    CHECK_THROWS_AS(expected_S(k6, vs({0, 1}), 5, 0), InputError);
  }

  TEST_CASE("closed form agrees with enumeration") {
    int instances = 0;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const Hypergraph h = random_hypergraph(9 + seed % 3, 2 + seed % 3, 10, seed);
      const unsigned r = uniformity(h).max_size;
      for (std::size_t s = 0; s < h.size(); s += 3) {
        for (unsigned w = 0; w + r <= h.num_vertices(); w += 2) {
          for (unsigned k = 0; k <= r + 1; ++k) {
            CHECK(expected_S(h, h.edge(s), w, k) == expected_S_oracle(h, h.edge(s), w, k));
            ++instances;
          }
        }
      }
    }
    CHECK(instances >= 100);
  }

  TEST_CASE("binomial ratio inequality") {
    CHECK(binomial_ratio_bound_check(10, 3, 7, 0));
    CHECK(binomial_ratio_bound_check(10, 3, 4, 3));
    for (unsigned n = 4; n <= 24; ++n) {
      for (unsigned r = 1; 2 * r <= n; ++r) {
        for (unsigned w = 1; w <= n - r; ++w) {
          for (unsigned j = 0; j <= r; ++j) CHECK(binomial_ratio_bound_check(n, r, w, j));
        }
      }
    }
    CHECK_THROWS_AS(binomial_ratio_bound_check(6, 2, 5, 1), InputError);
  }

  TEST_CASE("intersection sizes partition the W") {
    for (long n = 4; n <= 20; ++n) {
      for (long r = 1; r <= n; ++r) {
        for (long pn = 0; pn <= n; ++pn) {
          BigInt sum = 0;
          for (long t = 0; t <= r; ++t) sum += binomial(r, t) * binomial(n - r, pn - t);
          CHECK(sum == binomial(n, pn));
        }
      }
    }
  }

  TEST_CASE("budget") {
    BadPairParams p;
    p.k = 1;
    p.pn = 4;
    CHECK_THROWS_AS(count_bad_pairs(pairs(6), p, false, 10), ResourceError);
    CHECK_THROWS_AS(expected_S_oracle(pairs(12), vs({0, 1}), 5, 0, 10), ResourceError);
  }
}
