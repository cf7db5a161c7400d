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
#include <random>
#include <set>

#include "fixtures.hpp"
#include "spreadlab/combinatorics.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/generators.hpp"
#include "spreadlab/hypergraph.hpp"
#include "spreadlab/io.hpp"
#include "spreadlab/rational.hpp"

using namespace spreadlab;
using fixtures::make;
using fixtures::pairs;
using fixtures::vs;

TEST_SUITE("core") {
  TEST_CASE("vertex sets are canonical") {
    CHECK(vs({3, 1, 2}).vector() == std::vector<Vertex>{1, 2, 3});
    CHECK_THROWS_AS(VertexSet::from_sorted({2, 1}), InputError);
    CHECK_THROWS_AS(VertexSet::from_sorted({1, 1}), InputError);
    CHECK(vs({0, 2}) < vs({0, 3}));
    CHECK(vs({0, 5}) < vs({1}));
    CHECK(VertexSet::from_bits(vs({4, 70, 200}).bits()) == vs({4, 70, 200}));
  }

  TEST_CASE("bitset lexicographic order agrees with list order") {
    std::mt19937_64 gen(7);
    for (int iter = 0; iter < 2000; ++iter) {
      std::vector<Vertex> a, b;
      for (Vertex v = 0; v < 150; ++v) {
        if (gen() % 20 == 0) a.push_back(v);
        if (gen() % 20 == 0) b.push_back(v);
      }
      const auto sa = VertexSet::from_sorted(a), sb = VertexSet::from_sorted(b);
      CHECK(bits::lex_less(sa.bits(), sb.bits()) == (sa < sb));
    }
  }

  TEST_CASE("hypergraph rejects bad labels") {
    CHECK_THROWS_AS(make(3, {{0, 3}}), InputError);
    const Hypergraph k4 = pairs(4);
    CHECK_THROWS_AS(degree(k4, vs({4})), InputError);
  }

  TEST_CASE("degree and M_j on the pairs of four vertices") {
    const Hypergraph k4 = pairs(4);
    CHECK(degree(k4, VertexSet()) == 6);
    CHECK(degree(k4, vs({0})) == 3);
    CHECK(degree(k4, vs({0, 1})) == 1);
    CHECK(m_count(k4, vs({0, 1}), 0, CountMode::at_least) == 6);
    CHECK(m_count(k4, vs({0, 1}), 1, CountMode::at_least) == 5);
    CHECK(m_count(k4, vs({0, 1}), 2, CountMode::at_least) == 1);
    CHECK(m_count(k4, vs({0, 1}), 1, CountMode::exactly) == 4);
  }

  TEST_CASE("intersection profiles") {
    CHECK(intersection_profile(pairs(4), vs({0, 1})) == std::vector<Count>{1, 4, 1});
    CHECK(intersection_profile(pairs(4), VertexSet()) == std::vector<Count>{6});
    CHECK(intersection_profile(pairs(6), vs({0, 1})) == std::vector<Count>{6, 8, 1});
  }

  TEST_CASE("repeated edges count with multiplicity") {
    const Hypergraph h = make(3, {{0, 1}, {0, 1}, {1, 2}});
    CHECK(degree(h, vs({0, 1})) == 2);
    CHECK(h.max_multiplicity() == 2);
    CHECK(m_count(h, vs({1}), 1, CountMode::at_least) == 3);
  }

  TEST_CASE("uniformity") {
    const Uniformity u = uniformity(pairs(4));
    CHECK(u.uniform());
    CHECK(u.max_size == 2);
    const Uniformity mixed = uniformity(make(2, {{0}, {0, 1}}));
    CHECK_FALSE(mixed.uniform());
    CHECK(mixed.min_size == 1);
    CHECK(mixed.max_size == 2);
    CHECK(uniformity(perfect_matchings(6)).max_size == 3);
    CHECK_THROWS_AS(uniformity(Hypergraph(3, {})), InputError);
  }

  TEST_CASE("candidate sets") {
    CHECK(candidate_sets(pairs(4), 2, 2).size() == 6);
    CHECK(candidate_sets(pairs(4), 1, 1) == std::vector<VertexSet>{vs({0}), vs({1}), vs({2}), vs({3})});
    CHECK(candidate_sets(make(3, {{0, 1, 2}}), 0, 3).size() == 8);
  }

  TEST_CASE("candidate sets match brute force on random hypergraphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const unsigned n = 4 + static_cast<unsigned>(seed % 7);
      const unsigned r = 1 + static_cast<unsigned>(seed % 4);
      const Hypergraph h = random_hypergraph(n, std::min(r, n), 1 + seed % 9, seed);
      for (unsigned k = 0; k <= n; ++k) {
        std::vector<VertexSet> expected;
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
          if (static_cast<unsigned>(std::popcount(mask)) != k) continue;
          std::vector<Vertex> labels;
          for (Vertex v = 0; v < n; ++v) {
            if ((mask >> v) & 1U) labels.push_back(v);
          }
          const VertexSet a = VertexSet::from_sorted(labels);
          bool inside = false;
          for (const auto& e : h.edges()) inside = inside || a.is_subset_of(e);
          if (inside) expected.push_back(a);
        }
        std::sort(expected.begin(), expected.end());
        CHECK(candidate_sets(h, k, k) == expected);
      }
    }
  }

  TEST_CASE("profile identities hold on random hypergraphs") {
    std::mt19937_64 gen(11);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Hypergraph h = random_hypergraph(9, 3, 12, seed);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vertex> labels;
        for (Vertex v = 0; v < 9; ++v) {
          if (gen() % 3 == 0) labels.push_back(v);
        }
        const VertexSet a = VertexSet::from_sorted(labels);
        const auto profile = intersection_profile(h, a);
        Count sum = 0;
        for (Count c : profile) sum += c;
        CHECK(sum == h.size());
        Count prev = h.size();
        for (unsigned j = 0; j <= a.size(); ++j) {
          const Count mj = m_count(h, a, j, CountMode::at_least);
          CHECK(mj <= prev);
          prev = mj;
        }
        CHECK(m_count(h, a, 0, CountMode::at_least) == h.size());
        if (!a.empty()) CHECK(m_count(h, a, static_cast<unsigned>(a.size()), CountMode::at_least) == degree(h, a));
        if (a.size() > 1) {
          const VertexSet smaller = VertexSet::from_sorted(std::vector<Vertex>(labels.begin() + 1, labels.end()));
          CHECK(degree(h, a) <= degree(h, smaller));
        }
      }
    }
  }

  TEST_CASE("rational parsing") {
    CHECK(parse_rational("2/4") == Rational(1, 2));
    CHECK(parse_rational("3") == Rational(3));
    CHECK_THROWS_AS(parse_rational("0.3"), InputError);
    CHECK(parse_rational("0.3", true) == Rational(3, 10));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
  }

  TEST_CASE("radical rationals compare exactly") {
    // (C/2)^(-1/2) with C = 4 is 2^(-1/2).
    const RadicalRational r = RadicalRational::inverse_half_power(Rational(2), 1);
    CHECK(less(Rational(7071, 10000), r));
    CHECK(less(r, Rational(442, 625)));
    CHECK(less_equal(Rational(1, 2), RadicalRational::inverse_half_power(Rational(2), 2)));
    CHECK_FALSE(less(Rational(1, 2), RadicalRational::inverse_half_power(Rational(2), 2)));
  }

  TEST_CASE("binomial ratio identity") {
    std::mt19937_64 gen(5);
    for (int i = 0; i < 500; ++i) {
      const long a = static_cast<long>(gen() % 61);
      const long b = static_cast<long>(gen() % (a + 1));
      const long c = static_cast<long>(gen() % (b + 1));
      // C(a-c, b-c) / C(a, b) == C(b, c) / C(a, c)
      CHECK(binomial(a - c, b - c) * binomial(a, c) == binomial(b, c) * binomial(a, b));
    }
  }

  TEST_CASE("combination ranking round trips") {
    for (unsigned n = 0; n <= 9; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        std::vector<Vertex> c(k);
        for (unsigned i = 0; i < k; ++i) c[i] = i;
        std::uint64_t rank = 0;
        do {
          CHECK(rank_combination(n, c) == rank);
          CHECK(unrank_combination(n, k, rank) == c);
          ++rank;
        } while (next_combination(c, n));
        CHECK(rank == binom_u64(n, k));
      }
    }
    std::uint64_t visited = 0;
    for_each_combination_in_range(10, 4, 17, 120, [&](const VertexBits& b) {
      CHECK(bits::count(b) == 4);
      ++visited;
    });
    CHECK(visited == 103);
  }

  TEST_CASE("json interchange") {
    const Hypergraph h = make(5, {{0, 4}, {1, 2, 3}}).with_name("demo");
    CHECK(parse_hypergraph(serialize(h)) == h);
    CHECK_THROWS_AS(parse_hypergraph(R"({"n": 3, "edges": [[0, 3]]})"), InputError);
    CHECK_THROWS_AS(parse_hypergraph(R"({"n": 3, "edges": [[2, 1]]})"), InputError);
    CHECK_THROWS_AS(parse_hypergraph(R"({"n": 3, "edges": [[1, 1]]})"), InputError);
    CHECK_THROWS_AS(parse_hypergraph(R"({"edges": []})"), InputError);
    CHECK_THROWS_AS(parse_hypergraph("not json"), InputError);
    const json q = to_json(Rational(-3, 6));
    CHECK(q["num"] == "-1");
    CHECK(q["den"] == "2");
    CHECK(rational_from_json(q) == Rational(-1, 2));
  }
}
