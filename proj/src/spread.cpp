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

#include "spreadlab/spread.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "spreadlab/errors.hpp"
#include "spreadlab/rng.hpp"

namespace spreadlab {

SpreadProfile SpreadProfile::tiered(Rational q, std::vector<unsigned> r_sequence) {
  SpreadProfile p;
  p.q_values = {std::move(q)};
  p.r_sequence = std::move(r_sequence);
  return p;
}

SpreadProfile SpreadProfile::levels(std::vector<Rational> q_values, std::vector<unsigned> r_sequence) {
  SpreadProfile p;
  p.q_values = std::move(q_values);
  p.r_sequence = std::move(r_sequence);
  p.multilevel = true;
  return p;
}

void SpreadProfile::validate() const {
  if (r_sequence.empty()) throw InputError("r-sequence must be non-empty");
  for (std::size_t i = 0; i < r_sequence.size(); ++i) {
    if (r_sequence[i] < 1) throw InputError("r-sequence entries must be positive");
    if (i > 0 && r_sequence[i] >= r_sequence[i - 1]) {
      throw InputError("r-sequence must be strictly decreasing");
    }
  }
  if (multilevel) {
    if (q_values.size() + 1 != r_sequence.size()) {
      throw InputError("multi-level profile needs one q per level pair (" +
                       std::to_string(r_sequence.size() - 1) + "), got " + std::to_string(q_values.size()));
    }
  } else if (q_values.size() != 1) {
    throw InputError("tiered profile takes exactly one q");
  }
  for (const auto& q : q_values) {
    if (q <= 0 || q > 1) throw InputError("spread parameter must lie in (0, 1], got " + to_string(q));
  }
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::no_violation_found: return "no_violation_found";
  }
  return "?";
}

namespace {

struct Constraint {
  std::size_t level;
  unsigned j_first;  // constraint covers j_first <= j <= |A|
};

// Which inequalities apply to a set of each size, with integer thresholds
// floor(q^j |H|): an integer count M satisfies M <= q^j |H| iff M <= floor(...).
struct Plan {
  unsigned min_size = 1;
  unsigned max_size = 0;
  std::vector<std::vector<Constraint>> by_size;
  std::vector<std::vector<Count>> threshold;  // [level][j]
  std::vector<Rational> q;                    // [level]
  Count total = 0;

  bool empty() const { return max_size < min_size; }
};

void fill_thresholds(Plan& plan) {
  plan.threshold.resize(plan.q.size());
  for (std::size_t level = 0; level < plan.q.size(); ++level) {
    auto& row = plan.threshold[level];
    row.resize(plan.max_size + 1);
    Rational qj(1);
    for (unsigned j = 0; j <= plan.max_size; ++j) {
      row[j] = to_u64_saturating(floor(qj * Rational(BigInt(static_cast<unsigned long>(plan.total)))));
      qj *= plan.q[level];
    }
  }
}

Plan q_spread_plan(const Hypergraph& h, const Rational& q) {
  Plan plan;
  plan.total = h.size();
  plan.max_size = uniformity(h).max_size;
  plan.min_size = 1;
  plan.by_size.resize(plan.max_size + 1);
  for (unsigned s = 1; s <= plan.max_size; ++s) plan.by_size[s].push_back({0, s});
  plan.q = {q};
  fill_thresholds(plan);
  return plan;
}

// Every level pair i with r_i >= |A| >= r_{i+1} contributes; when a size sits
// on a shared boundary both pairs apply and the strictest outcome wins.
Plan profile_plan(const Hypergraph& h, const SpreadProfile& profile) {
  Plan plan;
  plan.total = h.size();
  const auto& r = profile.r_sequence;
  if (r.size() < 2) {
    plan.max_size = 0;
    plan.min_size = 1;
    return plan;
  }
  plan.max_size = r.front();
  plan.min_size = r.back();
  plan.by_size.resize(plan.max_size + 1);
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    for (unsigned s = r[i + 1]; s <= r[i]; ++s) plan.by_size[s].push_back({i, r[i + 1]});
  }
  for (std::size_t i = 0; i + 1 < r.size(); ++i) plan.q.push_back(profile.q_for_pair(i));
  fill_thresholds(plan);
  return plan;
}

struct Failure {
  unsigned j;
  std::size_t level;
  Count lhs;
};

// Smallest failing j (then smallest level) for set `a`; `tails` is scratch.
std::optional<Failure> first_failure(const Hypergraph& h, const Plan& plan, const VertexBits& a,
                                     std::vector<Count>& tails) {
  const unsigned s = bits::count(a);
  if (s < plan.min_size || s > plan.max_size) return std::nullopt;
  const auto& cons = plan.by_size[s];
  if (cons.empty()) return std::nullopt;
  std::span<Count> hist(tails.data(), s + 1);
  intersection_profile(h, a, hist);
  tail_sums(hist);
  if (hist[s] == 0) return std::nullopt;  // d(A) = 0: not a candidate
  unsigned j_lo = s;
  for (const auto& c : cons) j_lo = std::min(j_lo, c.j_first);
  for (unsigned j = j_lo; j <= s; ++j) {
    for (const auto& c : cons) {
      if (j >= c.j_first && hist[j] > plan.threshold[c.level][j]) return Failure{j, c.level, hist[j]};
    }
  }
  return std::nullopt;
}

Witness make_witness(const Plan& plan, const VertexBits& a, const Failure& f) {
  Witness w;
  w.set = VertexSet::from_bits(a);
  w.j = f.j;
  w.level = f.level;
  w.lhs = f.lhs;
  w.rhs = pow(plan.q[f.level], f.j) * Rational(BigInt(static_cast<unsigned long>(plan.total)));
  return w;
}

void check_budget(const Hypergraph& h, const Plan& plan, std::uint64_t budget) {
  const double cost = candidate_set_cost(h, plan.min_size, plan.max_size);
  if (cost > static_cast<double>(budget)) {
    throw ResourceError("exact certification needs ~" + std::to_string(static_cast<long double>(cost)) +
                        " candidate sets, budget is " + std::to_string(budget) +
                        "; use sampled certification");
  }
}

CertResult run_exact(const Hypergraph& h, const Plan& plan, std::uint64_t budget) {
  CertResult result;
  if (plan.empty()) return result;
  check_budget(h, plan, budget);
  const std::vector<VertexBits> cands = candidate_bits(h, plan.min_size, plan.max_size);
  result.sets_checked = cands.size();

  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::size_t best = none;
  const auto count = static_cast<std::int64_t>(cands.size());
#pragma omp parallel
  {
    std::size_t local = none;
    std::vector<Count> tails(plan.max_size + 1);
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto idx = static_cast<std::size_t>(i);
      if (local != none && !bits::lex_less(cands[idx], cands[local])) continue;
      if (first_failure(h, plan, cands[idx], tails)) local = idx;
    }
#pragma omp critical(spreadlab_cert_merge)
    {
      if (local != none && (best == none || bits::lex_less(cands[local], cands[best]))) best = local;
    }
  }
  if (best != none) {
    std::vector<Count> tails(plan.max_size + 1);
    result.verdict = Verdict::fail;
    result.witness = make_witness(plan, cands[best], *first_failure(h, plan, cands[best], tails));
  }
  return result;
}

CertResult run_sampled(const Hypergraph& h, const Plan& plan, std::uint64_t samples, std::uint64_t seed) {
  CertResult result;
  result.verdict = Verdict::no_violation_found;
  result.samples = samples;
  if (plan.empty() || h.empty()) return result;

  auto draw = [&](std::uint64_t i) -> std::optional<VertexBits> {
    Rng rng(derive_seed(seed, i));
    const VertexSet& edge = h.edge(static_cast<std::size_t>(rng.below(h.size())));
    std::vector<unsigned> sizes;
    for (unsigned s = plan.min_size; s <= std::min<unsigned>(plan.max_size, static_cast<unsigned>(edge.size())); ++s) {
      if (!plan.by_size[s].empty()) sizes.push_back(s);
    }
    if (sizes.empty()) return std::nullopt;
    const unsigned s = sizes[rng.below(sizes.size())];
    std::vector<Vertex> pool(edge.begin(), edge.end());
    VertexBits a{};
    for (unsigned t = 0; t < s; ++t) {
      const auto pick = t + static_cast<std::size_t>(rng.below(pool.size() - t));
      std::swap(pool[t], pool[pick]);
      bits::set(a, pool[t]);
    }
    return a;
  };

  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  const auto n = static_cast<std::int64_t>(samples);
#pragma omp parallel
  {
    std::vector<Count> tails(plan.max_size + 1);
    std::uint64_t local = std::numeric_limits<std::uint64_t>::max();
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto idx = static_cast<std::uint64_t>(i);
      if (idx > local) continue;
      if (auto a = draw(idx); a && first_failure(h, plan, *a, tails)) local = std::min(local, idx);
    }
#pragma omp critical(spreadlab_sample_merge)
    first = std::min(first, local);
  }
  result.sets_checked = samples;
  if (first != std::numeric_limits<std::uint64_t>::max()) {
    std::vector<Count> tails(plan.max_size + 1);
    const VertexBits a = *draw(first);
    result.verdict = Verdict::fail;
    result.witness = make_witness(plan, a, *first_failure(h, plan, a, tails));
  }
  return result;
}

void require_nonempty(const Hypergraph& h) {
  if (h.empty()) throw InputError("spread certification requires a non-empty hypergraph");
}

void require_q(const Rational& q) {
  if (q <= 0 || q > 1) throw InputError("spread parameter must lie in (0, 1], got " + to_string(q));
}

void require_bounded(const Hypergraph& h, const SpreadProfile& profile) {
  const unsigned r = uniformity(h).max_size;
  if (r > profile.r_sequence.front()) {
    throw PreconditionError("hypergraph has an edge of size " + std::to_string(r) + " and is not " +
                            std::to_string(profile.r_sequence.front()) + "-bounded");
  }
}

struct Best {
  RootRatio ratio{0, 1, 1};
  VertexBits set{};
  unsigned j = 0;
  std::size_t level = 0;
  bool valid = false;
};

bool better(const Best& x, const Best& y) {
  if (!x.valid) return false;
  if (!y.valid) return true;
  const int c = compare(x.ratio, y.ratio);
  if (c != 0) return c > 0;
  if (x.set != y.set) return bits::lex_less(x.set, y.set);
  if (x.j != y.j) return x.j < y.j;
  return x.level < y.level;
}

MinSpread run_min(const Hypergraph& h, const Plan& plan, std::uint64_t budget) {
  MinSpread out;
  out.q = RootRatio{0, std::max<Count>(h.size(), 1), 1};
  if (plan.empty()) return out;
  check_budget(h, plan, budget);
  const std::vector<VertexBits> cands = candidate_bits(h, plan.min_size, plan.max_size);
  Best best;
  const auto count = static_cast<std::int64_t>(cands.size());
#pragma omp parallel
  {
    Best local;
    std::vector<Count> tails(plan.max_size + 1);
#pragma omp for schedule(dynamic, 256)
    for (std::int64_t i = 0; i < count; ++i) {
      const VertexBits& a = cands[static_cast<std::size_t>(i)];
      const unsigned s = bits::count(a);
      const auto& cons = plan.by_size[s];
      if (cons.empty()) continue;
      std::span<Count> hist(tails.data(), s + 1);
      intersection_profile(h, a, hist);
      tail_sums(hist);
      for (const auto& c : cons) {
        for (unsigned j = c.j_first; j <= s; ++j) {
          if (hist[j] == 0) continue;
          Best cand{RootRatio{hist[j], plan.total, j}, a, j, c.level, true};
          if (better(cand, local)) local = cand;
        }
      }
    }
#pragma omp critical(spreadlab_min_merge)
    {
      if (better(local, best)) best = local;
    }
  }
  if (best.valid) {
    out.q = best.ratio;
    out.witness = VertexSet::from_bits(best.set);
    out.j = best.j;
    out.level = best.level;
  }
  return out;
}

}  // namespace

CertResult certify_q_spread(const Hypergraph& h, const Rational& q, std::uint64_t budget) {
  require_nonempty(h);
  require_q(q);
  return run_exact(h, q_spread_plan(h, q), budget);
}

CertResult certify_tiered(const Hypergraph& h, const SpreadProfile& profile, std::uint64_t budget) {
  require_nonempty(h);
  profile.validate();
  if (profile.multilevel) throw InputError("certify_tiered expects a single-q profile");
  require_bounded(h, profile);
  return run_exact(h, profile_plan(h, profile), budget);
}

CertResult certify_multilevel(const Hypergraph& h, const SpreadProfile& profile, std::uint64_t budget) {
  require_nonempty(h);
  profile.validate();
  if (!profile.multilevel) throw InputError("certify_multilevel expects a multi-level profile");
  require_bounded(h, profile);
  return run_exact(h, profile_plan(h, profile), budget);
}

CertResult certify_q_spread_sampled(const Hypergraph& h, const Rational& q, std::uint64_t samples,
                                    std::uint64_t seed) {
  require_nonempty(h);
  require_q(q);
  return run_sampled(h, q_spread_plan(h, q), samples, seed);
}

CertResult certify_profile_sampled(const Hypergraph& h, const SpreadProfile& profile, std::uint64_t samples,
                                   std::uint64_t seed) {
  require_nonempty(h);
  profile.validate();
  require_bounded(h, profile);
  return run_sampled(h, profile_plan(h, profile), samples, seed);
}

bool recheck_witness(const Hypergraph& h, const Witness& w) {
  if (w.set.empty() || w.j > w.set.size()) return false;
  if (m_count(h, w.set, w.j, CountMode::at_least) != w.lhs) return false;
  if (degree(h, w.set) == 0) return false;
  return Rational(BigInt(static_cast<unsigned long>(w.lhs))) > w.rhs;
}

double RootRatio::value() const {
  if (count == 0) return 0.0;
  return std::pow(static_cast<double>(count) / static_cast<double>(total), 1.0 / exponent);
}

std::optional<Rational> RootRatio::exact() const {
  Rational base(BigInt(static_cast<unsigned long>(count)), BigInt(static_cast<unsigned long>(total)));
  base.canonicalize();
  if (exponent == 1) return base;
  BigInt num_root, den_root;
  const bool num_exact = mpz_root(num_root.get_mpz_t(), base.get_num_mpz_t(), exponent) != 0;
  const bool den_exact = mpz_root(den_root.get_mpz_t(), base.get_den_mpz_t(), exponent) != 0;
  if (!num_exact || !den_exact) return std::nullopt;
  Rational r(num_root, den_root);
  r.canonicalize();
  return r;
}

Rational RootRatio::upper(std::uint64_t den) const {
  // Smallest a in [0, den] with a^e * total >= count * den^e.
  const BigInt d(static_cast<unsigned long>(den));
  const BigInt rhs = BigInt(static_cast<unsigned long>(count)) * pow(d, exponent);
  const BigInt t(static_cast<unsigned long>(total));
  std::uint64_t lo = 0;
  std::uint64_t hi = den;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (pow(BigInt(static_cast<unsigned long>(mid)), exponent) * t >= rhs) hi = mid; else lo = mid + 1;
  }
  Rational r(BigInt(static_cast<unsigned long>(lo)), d);
  r.canonicalize();
  return r;
}

Rational RootRatio::strictly_below(std::uint64_t den) const {
  const Rational up = upper(den);
  Rational r = up - Rational(1, static_cast<unsigned long>(den));
  r.canonicalize();
  return r < 0 ? Rational(0) : r;
}

int compare(const RootRatio& a, const RootRatio& b) {
  if (a.count == 0 || b.count == 0) {
    return (a.count == 0 ? 0 : 1) - (b.count == 0 ? 0 : 1);
  }
  const double la = std::log(static_cast<double>(a.count) / static_cast<double>(a.total)) / a.exponent;
  const double lb = std::log(static_cast<double>(b.count) / static_cast<double>(b.total)) / b.exponent;
  if (std::abs(la - lb) > 1e-9) return la < lb ? -1 : 1;
  // (ca/ta)^(1/ea) vs (cb/tb)^(1/eb)  <=>  ca^eb * tb^ea vs cb^ea * ta^eb
  const BigInt lhs = pow(BigInt(static_cast<unsigned long>(a.count)), b.exponent) *
                     pow(BigInt(static_cast<unsigned long>(b.total)), a.exponent);
  const BigInt rhs = pow(BigInt(static_cast<unsigned long>(b.count)), a.exponent) *
                     pow(BigInt(static_cast<unsigned long>(a.total)), b.exponent);
  return cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

MinSpread min_q_spread(const Hypergraph& h, std::uint64_t budget) {
  require_nonempty(h);
  return run_min(h, q_spread_plan(h, Rational(1)), budget);
}

MinSpread min_q_tiered(const Hypergraph& h, const std::vector<unsigned>& r_sequence, std::uint64_t budget) {
  require_nonempty(h);
  const SpreadProfile profile = SpreadProfile::tiered(Rational(1), r_sequence);
  profile.validate();
  require_bounded(h, profile);
  return run_min(h, profile_plan(h, profile), budget);
}

}  // namespace spreadlab
