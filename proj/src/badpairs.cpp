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

#include "spreadlab/badpairs.hpp"

#include <omp.h>

#include <algorithm>
#include <unordered_map>

#include "spreadlab/combinatorics.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/spread.hpp"

namespace spreadlab {

namespace {

unsigned uniform_size(const Hypergraph& h) {
  const Uniformity u = uniformity(h);
  if (!u.uniform()) throw InputError("bad-pair analysis needs a uniform hypergraph");
  return u.max_size;
}

Rational big(std::size_t x) { return Rational(BigInt(static_cast<unsigned long>(x))); }

Rational ratio(const BigInt& a, const BigInt& b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

// Edges S inside z for which every edge S' inside z meets S in more than k
// vertices, i.e. (S, z \ S) is k-bad.
Count bad_inside(std::span<const VertexBits> edges, const VertexBits& z, unsigned k) {
  std::vector<const VertexBits*> inside;
  for (const auto& e : edges) {
    if (bits::is_subset(e, z)) inside.push_back(&e);
  }
  Count count = 0;
  for (const VertexBits* s : inside) {
    bool bad = true;
    for (const VertexBits* other : inside) {
      if (bits::intersection_count(*s, *other) <= k) {
        bad = false;
        break;
      }
    }
    count += bad ? 1 : 0;
  }
  return count;
}

Rational expectation_for(const Hypergraph& h, const VertexSet& s, unsigned r, unsigned w, unsigned k) {
  const auto n = static_cast<long>(h.num_vertices());
  const BigInt den = binomial(n - r, w);
  if (den == 0) throw InputError("w = " + std::to_string(w) + " exceeds n - r");
  const std::vector<Count> m = intersection_profile(h, s);
  BigInt num = 0;
  for (unsigned j = k; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    num += BigInt(static_cast<unsigned long>(m[j])) * binomial(n - 2L * r + j, static_cast<long>(w) - r + j);
  }
  return ratio(num, den);
}

}  // namespace

bool certified_pair_spread(const Hypergraph& h, const Rational& q, unsigned k, std::uint64_t budget) {
  if (k == 0) throw InputError("k must be positive");
  const unsigned r = uniform_size(h);
  if (k < r) return certify_tiered(h, SpreadProfile::tiered(q, {r, k}), budget).passed();
  if (k > r) return true;
  return big(h.max_multiplicity()) <= pow(q, r) * big(h.size());
}

Hypotheses check_hypotheses(const Hypergraph& h, const BadPairParams& params, std::uint64_t budget) {
  const unsigned r = uniform_size(h);
  const std::size_t n = h.num_vertices();
  Hypotheses hyp;
  hyp.c_at_least_4 = params.c >= 4;
  hyp.p_at_most_half = params.p() <= Rational(1, 2);
  hyp.pn_at_least_2r = params.pn >= 2 * r;
  hyp.pn_within_n = params.pn <= n;
  hyp.literal = params.p() * big(n) == big(params.pn);
  if (params.q > 0 && params.q <= 1) {
    try {
      hyp.certified = certified_pair_spread(h, params.q, params.k, budget);
    } catch (const ResourceError&) {
      hyp.certified = false;
    }
  }
  return hyp;
}

RadicalRational pathology_threshold(std::size_t n, unsigned r, unsigned w, unsigned k, const Rational& c,
                                    std::size_t h_size) {
  const auto nl = static_cast<long>(n);
  const BigInt den = binomial(nl, static_cast<long>(w) + r);
  if (den == 0) throw InputError("w + r exceeds n");
  const Rational base = big(h_size) * ratio(binomial(nl - r, w), den);
  return RadicalRational::inverse_half_power(c / 2, k) * base;
}

RadicalRational lemma21_bound(std::size_t n, unsigned pn, unsigned k, const Rational& c, std::size_t h_size) {
  if (c < 4) throw InputError("the bad-pair bound needs C >= 4");
  if (pn > n) throw InputError("pn exceeds n");
  const Rational scale = Rational(3) * big(h_size) * Rational(binomial(static_cast<long>(n), pn));
  return RadicalRational::inverse_half_power(c / 2, k) * scale;
}

PathologyVerdict is_pathological(const Hypergraph& h, const VertexSet& z, unsigned k, unsigned w,
                                 const RadicalRational& n_threshold) {
  const unsigned r = uniform_size(h);
  h.validate(z);
  if (z.size() != static_cast<std::size_t>(r) + w) {
    throw InputError("Z must have r + w = " + std::to_string(r + w) + " vertices, got " + std::to_string(z.size()));
  }
  PathologyVerdict v;
  v.count = bad_inside(h.all_edge_bits(), z.bits(), k);
  v.pathological = less(n_threshold, big(v.count));
  return v;
}

Rational expected_S(const Hypergraph& h, const VertexSet& s, unsigned w, unsigned k) {
  const unsigned r = uniform_size(h);
  if (h.find_edge(s) == h.size()) throw InputError("set " + s.to_string() + " is not an edge of the hypergraph");
  return expectation_for(h, s, r, w, k);
}

Rational expected_S_oracle(const Hypergraph& h, const VertexSet& s, unsigned w, unsigned k, std::uint64_t budget) {
  const unsigned r = uniform_size(h);
  if (h.find_edge(s) == h.size()) throw InputError("set " + s.to_string() + " is not an edge of the hypergraph");
  const auto n = static_cast<unsigned>(h.num_vertices());
  if (w > n - r) throw InputError("w = " + std::to_string(w) + " exceeds n - r");
  const std::uint64_t choices = binom_u64(n - r, w);
  if (choices > budget) {
    throw ResourceError("enumerating " + std::to_string(choices) + " sets W' exceeds the budget of " +
                        std::to_string(budget));
  }
  const VertexBits sb = s.bits();
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < n; ++v) {
    if (!bits::test(sb, v)) outside.push_back(v);
  }
  const auto edges = h.all_edge_bits();
  Count sum = 0;
  for_each_combination_in_range(n - r, w, 0, choices, [&](const VertexBits& idx) {
    VertexBits z = sb;
    for (unsigned i = 0; i < n - r; ++i) {
      if (bits::test(idx, i)) bits::set(z, outside[i]);
    }
    for (const auto& e : edges) {
      if (bits::is_subset(e, z) && bits::intersection_count(e, sb) >= k) ++sum;
    }
  });
  return ratio(BigInt(static_cast<unsigned long>(sum)), BigInt(static_cast<unsigned long>(choices)));
}

bool binomial_ratio_bound_check(unsigned n, unsigned r, unsigned w, unsigned j) {
  if (j > r || r > n || w > n - r) throw InputError("need j <= r <= n and w <= n - r");
  const BigInt d1 = binomial(n - r, r - j);
  if (d1 == 0) throw InputError("C(n-r, r-j) vanishes");
  const Rational lhs = ratio(binomial(w, r - j), d1) * ratio(binomial(n, w + r), binomial(n - r, w));
  if (w == 0) return j > 0 || lhs <= 1;
  return lhs <= pow(ratio(BigInt(n - r), BigInt(w)), j);
}

bool BadPairReport::counting_checks_hold() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const IntersectionRow& row) { return row.non_pathological_holds && row.markov_holds; });
}

BadPairReport count_bad_pairs(const Hypergraph& h, const BadPairParams& params, bool require_hypotheses,
                              std::uint64_t budget) {
  const unsigned r = uniform_size(h);
  const auto n = static_cast<unsigned>(h.num_vertices());
  if (params.k == 0) throw InputError("k must be positive");
  if (params.c <= 0 || params.q <= 0) throw InputError("C and q must be positive");
  if (params.pn > n) throw InputError("pn = " + std::to_string(params.pn) + " exceeds n = " + std::to_string(n));

  BadPairReport report;
  report.params = params;
  report.n = n;
  report.r = r;
  report.h_size = h.size();
  report.hypotheses = check_hypotheses(h, params);
  if (require_hypotheses && !report.hypotheses.numeric()) {
    std::string failing;
    if (!report.hypotheses.c_at_least_4) failing += " C>=4";
    if (!report.hypotheses.p_at_most_half) failing += " p<=1/2";
    if (!report.hypotheses.pn_at_least_2r) failing += " pn>=2r";
    throw PreconditionError("bad-pair hypotheses fail:" + failing);
  }

  report.sets_enumerated = binomial(n, params.pn);
  const BigInt cost = report.sets_enumerated * BigInt(static_cast<unsigned long>(h.size()));
  if (cost > BigInt(static_cast<unsigned long>(budget))) {
    throw ResourceError("bad-pair enumeration costs " + cost.get_str() + " pair checks, budget is " +
                        std::to_string(budget));
  }
  const std::uint64_t total_w = binom_u64(n, params.pn);
  const unsigned k = params.k;

  // N per t; index t in [0, r].
  std::vector<RadicalRational> threshold(r + 1);
  for (unsigned t = 0; t <= r && t <= params.pn; ++t) {
    const unsigned w = params.pn - t;
    if (w + r <= n) threshold[t] = pathology_threshold(n, r, w, k, params.c, h.size());
  }

  const auto edges = h.all_edge_bits();
  std::vector<Count> bad(r + 1, 0), path(r + 1, 0);
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(4096, total_w / 64 + 1));
  const auto chunks = static_cast<std::int64_t>((total_w + chunk - 1) / chunk);

#pragma omp parallel
  {
    std::vector<Count> local_bad(r + 1, 0), local_path(r + 1, 0);
    std::unordered_map<VertexBits, bool, bits::Hash> memo;
    std::vector<VertexBits> residuals;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t first = static_cast<std::uint64_t>(c) * chunk;
      const std::uint64_t last = std::min(total_w, first + chunk);
      for_each_combination_in_range(n, params.pn, first, last, [&](const VertexBits& w) {
        residuals.clear();
        bool inside_w = false;
        for (const auto& e : edges) {
          const VertexBits d = bits::difference(e, w);
          const unsigned size = bits::count(d);
          if (size == 0) inside_w = true;
          if (size <= k) residuals.push_back(d);
        }
        if (inside_w) return;
        for (const auto& s : edges) {
          bool good = false;
          for (const auto& res : residuals) {
            if (bits::is_subset(res, s)) {
              good = true;
              break;
            }
          }
          if (good) continue;
          const unsigned t = bits::intersection_count(s, w);
          ++local_bad[t];
          const VertexBits z = bits::unite(s, w);
          auto it = memo.find(z);
          if (it == memo.end()) {
            const Count inside = bad_inside(edges, z, k);
            it = memo.emplace(z, less(threshold[t], big(inside))).first;
          }
          if (it->second) ++local_path[t];
        }
      });
    }
#pragma omp critical
    for (unsigned t = 0; t <= r; ++t) {
      bad[t] += local_bad[t];
      path[t] += local_path[t];
    }
  }

  const RadicalRational scale = RadicalRational::inverse_half_power(params.c / 2, k);
  for (unsigned t = 0; t <= r && t <= params.pn; ++t) {
    const unsigned w = params.pn - t;
    if (w > n - r) continue;
    IntersectionRow row;
    row.t = t;
    row.w = w;
    row.bad = bad[t];
    row.pathological = path[t];
    row.non_pathological = bad[t] - path[t];
    row.n_threshold = threshold[t];
    const BigInt choices = binomial(r, t) * binomial(n - r, w);
    row.claim_bound = scale * (big(h.size()) * Rational(choices));
    row.non_pathological_holds = less_equal(big(row.non_pathological), row.claim_bound);
    row.pathological_holds = less_equal(big(row.pathological), row.claim_bound * Rational(2));
    Rational sum = 0;
    for (std::size_t s = 0; s < h.size(); ++s) sum += expectation_for(h, h.edge(s), r, w, k);
    row.expectation_sum = sum;
    row.markov_holds = !less(Rational(choices) * sum, row.n_threshold * big(row.pathological));
    report.total += row.bad;
    report.rows.push_back(std::move(row));
  }
  const Rational scale3 = Rational(3) * big(h.size()) * Rational(report.sets_enumerated);
  report.bound = scale * scale3;
  report.within_bound = less_equal(big(report.total), report.bound);
  return report;
}

json to_json(const BadPairReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back(json{{"t", row.t},
                        {"w", row.w},
                        {"bad", row.bad},
                        {"pathological", row.pathological},
                        {"non_pathological", row.non_pathological},
                        {"N", to_json(row.n_threshold)},
                        {"non_pathological_bound", to_json(row.claim_bound)},
                        {"non_pathological_holds", row.non_pathological_holds},
                        {"pathological_bound", to_json(row.claim_bound * Rational(2))},
                        {"pathological_holds", row.pathological_holds},
                        {"expectation_sum", to_json(row.expectation_sum)},
                        {"markov_holds", row.markov_holds}});
  }
  const Hypotheses& hyp = report.hypotheses;
  return json{{"n", report.n},
              {"r", report.r},
              {"H_size", report.h_size},
              {"C", to_json(report.params.c)},
              {"q", to_json(report.params.q)},
              {"p", to_json(report.params.p())},
              {"k", report.params.k},
              {"pn", report.params.pn},
              {"hypotheses",
               {{"C_at_least_4", hyp.c_at_least_4},
                {"p_at_most_half", hyp.p_at_most_half},
                {"pn_at_least_2r", hyp.pn_at_least_2r},
                {"pn_equals_p_times_n", hyp.literal},
                {"certified_spread", hyp.certified},
                {"all", hyp.all()}}},
              {"per_t", std::move(rows)},
              {"total", report.total},
              {"bound", to_json(report.bound)},
              {"within_bound", report.within_bound},
              {"counting_checks_hold", report.counting_checks_hold()},
              {"sets_W", report.sets_enumerated.get_str()}};
}

}  // namespace spreadlab
