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

#include "spreadlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include <openssl/evp.h>
#include <unistd.h>

#include "spreadlab/badpairs.hpp"
#include "spreadlab/cli.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/fragmentation.hpp"
#include "spreadlab/generators.hpp"
#include "spreadlab/rng.hpp"
#include "spreadlab/spread.hpp"
#include "spreadlab/threshold.hpp"

namespace spreadlab::acceptance {

namespace {

// Pinned tolerances and sizes.
constexpr std::uint64_t kSeed = 20261019;
constexpr std::uint64_t kRootDen = std::uint64_t{1} << 20;
constexpr std::uint64_t kCalibrationTrials = 10'000;
constexpr unsigned kCalibrationRequired = 18;  // of 20
constexpr double kWilsonConfidence = 0.95;
constexpr std::uint64_t kScanTrials = 2'000;
constexpr double kScanSigmas = 3.0;
constexpr double kScanViolationRate = 0.01;
constexpr std::uint64_t kFrequencyRuns = 2'000;
constexpr double kFrequencySigmas = 3.0;

struct Sizes {
  std::size_t population;
  std::size_t expectation_instances;
  std::size_t traces;
};

Sizes sizes_for(Profile p) {
  return p == Profile::quick ? Sizes{200, 150, 520} : Sizes{2000, 2000, 5000};
}

// e rounded up: e < 27182818285 / 10^10.
Rational e_upper() {
  Rational e(BigInt("27182818285"), BigInt("10000000000"));
  e.canonicalize();
  return e;
}

Rational canonical(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational root_upper(const RootRatio& q) {
  if (auto e = q.exact()) return *e;
  return q.upper(kRootDen);
}

Hypergraph mixed_hypergraph(std::uint64_t seed, unsigned n, unsigned r1, std::size_t m) {
  Rng rng(seed);
  std::vector<VertexSet> edges{random_subset(rng, n, r1)};
  for (std::size_t i = 1; i < m; ++i) {
    edges.push_back(random_subset(rng, n, 1 + static_cast<unsigned>(rng.below(r1))));
  }
  return Hypergraph(n, std::move(edges), "mixed(" + std::to_string(seed) + ")");
}

// n <= 10, r_1 in [2, 5]; even indices uniform, odd indices mixed sizes.
std::vector<Hypergraph> population(std::size_t count) {
  std::vector<Hypergraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = derive_seed(kSeed, i);
    Rng rng(seed);
    const unsigned n = 4 + static_cast<unsigned>(rng.below(7));
    const unsigned r1 = 2 + static_cast<unsigned>(rng.below(std::min(5U, n - 1) - 1));
    const std::size_t m = 1 + rng.below(12);
    out.push_back(i % 2 == 0 ? random_hypergraph(n, r1, m, splitmix64(seed)) : mixed_hypergraph(splitmix64(seed), n, r1, m));
  }
  return out;
}

// (r1, ..., 1) with at most two interior values.
std::vector<std::vector<unsigned>> sequences_ending_in_one(unsigned r1) {
  std::vector<std::vector<unsigned>> out{{r1, 1}};
  for (unsigned a = r1 - 1; a >= 2; --a) {
    out.push_back({r1, a, 1});
    for (unsigned b = a - 1; b >= 2; --b) out.push_back({r1, a, b, 1});
  }
  return out;
}

// Strictly decreasing from r1, r_{i+1} >= ceil(r_i / 2), length 2 or 3.
std::vector<std::vector<unsigned>> halving_sequences(unsigned r1) {
  std::vector<std::vector<unsigned>> out;
  for (unsigned a = r1 - 1; a >= 1 && a >= (r1 + 1) / 2; --a) {
    out.push_back({r1, a});
    for (unsigned b = a - 1; b >= 1 && b >= (a + 1) / 2; --b) out.push_back({r1, a, b});
    if (a == 1) break;
  }
  return out;
}

std::string witness_text(const Hypergraph& h, const CertResult& r) {
  std::string s = h.name();
  if (r.witness) s += " A=" + r.witness->set.to_string() + " j=" + std::to_string(r.witness->j);
  return s;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

CriterionResult tiered_implies_q(const std::vector<Hypergraph>& pop) {
  CriterionResult res{1, "tiered spread implies q-spread", false, false, {}, 0, 120};
  std::size_t checked = 0, failures = 0, inconsistent = 0;
  std::string first;
  for (const auto& h : pop) {
    const unsigned r1 = uniformity(h).max_size;
    for (const auto& seq : sequences_ending_in_one(r1)) {
      std::vector<Rational> qs;
      for (long i = 1; i <= 10; ++i) qs.push_back(canonical(i, 10));
      const MinSpread m = min_q_tiered(h, seq);
      if (m.witness) {
        const Rational q = root_upper(m.q);
        if (!certify_tiered(h, SpreadProfile::tiered(q, seq)).passed()) ++inconsistent;
        qs.push_back(q);
      }
      for (const auto& q : qs) {
        if (!certify_tiered(h, SpreadProfile::tiered(q, seq)).passed()) continue;
        ++checked;
        const CertResult c = certify_q_spread(h, q);
        if (!c.passed()) {
          if (failures++ == 0) first = witness_text(h, c) + " q=" + spreadlab::to_string(q);
        }
      }
    }
  }
  res.passed = failures == 0 && inconsistent == 0 && checked > 0 && pop.size() >= 200;
  res.detail = std::to_string(pop.size()) + " hypergraphs, " + std::to_string(checked) + " implications, " +
               std::to_string(failures) + " failures, " + std::to_string(inconsistent) + " min-q inconsistencies" +
               (first.empty() ? "" : "; first: " + first);
  return res;
}

CriterionResult q_implies_tiered(const std::vector<Hypergraph>& pop) {
  CriterionResult res{2, "q-spread implies tiered spread at 4q", false, false, {}, 0, 120};
  std::size_t checked = 0, failures = 0, inconsistent = 0;
  std::string first;
  for (const auto& h : pop) {
    const Rational q = root_upper(min_q_spread(h).q);
    if (!certify_q_spread(h, q).passed()) {
      ++inconsistent;
      continue;
    }
    const Rational q4 = Rational(4) * q < 1 ? Rational(4 * q) : Rational(1);
    for (const auto& seq : halving_sequences(uniformity(h).max_size)) {
      ++checked;
      const CertResult c = certify_tiered(h, SpreadProfile::tiered(q4, seq));
      if (!c.passed()) {
        if (failures++ == 0) first = witness_text(h, c) + " 4q=" + spreadlab::to_string(q4);
      }
    }
  }
  res.passed = failures == 0 && inconsistent == 0 && checked > 0 && pop.size() >= 200;
  res.detail = std::to_string(pop.size()) + " hypergraphs, " + std::to_string(checked) + " sequences, " +
               std::to_string(failures) + " failures, " + std::to_string(inconsistent) + " min-q inconsistencies" +
               (first.empty() ? "" : "; first: " + first);
  return res;
}

std::vector<Hypergraph> uniform_suite(const std::vector<Hypergraph>& pop) {
  std::vector<Hypergraph> out;
  for (const auto& h : pop) {
    if (uniformity(h).uniform()) out.push_back(h);
  }
  for (unsigned n = 4; n <= 10; ++n) {
    for (unsigned r = 1; r <= std::min(5U, n); ++r) out.push_back(complete_uniform(n, r));
  }
  for (unsigned n : {4U, 6U, 8U}) out.push_back(perfect_matchings(n));
  for (unsigned n : {4U, 5U, 6U}) out.push_back(hamilton_cycles(n));
  for (unsigned n : {5U, 6U}) out.push_back(hamilton_squares(n));
  const Hypergraph triangle = complete_uniform(3, 2);
  for (unsigned n : {4U, 5U, 6U}) out.push_back(copies_of(triangle, n));
  return out;
}

CriterionResult dimension_bound(const std::vector<Hypergraph>& suite) {
  CriterionResult res{3, "r_1 <= e q n at the minimal q", false, false, {}, 0, 0};
  const Rational e = e_upper();
  std::size_t failures = 0, tight = 0, not_tight = 0;
  std::string first;
  for (const auto& h : suite) {
    const unsigned r1 = uniformity(h).max_size;
    const MinSpread m = min_q_spread(h);
    // r_1 <= e q n  <=>  (r_1 / (e n))^k <= count / total  with q = (count / total)^(1/k)
    const Rational base = Rational(r1) / (e * Rational(static_cast<unsigned long>(h.num_vertices())));
    Rational ratio(BigInt(std::to_string(m.q.count)), BigInt(std::to_string(m.q.total)));
    ratio.canonicalize();
    if (!(pow(base, m.q.exponent) <= ratio)) {
      if (failures++ == 0) first = h.name();
    }
    const Rational below = m.q.strictly_below(kRootDen);
    if (below > 0) {
      if (certify_q_spread(h, below).passed()) {
        ++not_tight;
        if (first.empty()) first = h.name() + " passes below min q";
      } else {
        ++tight;
      }
    }
  }
  res.passed = failures == 0 && not_tight == 0 && !suite.empty();
  res.detail = std::to_string(suite.size()) + " uniform instances, " + std::to_string(failures) +
               " bound failures, " + std::to_string(tight) + " fail just below min q, " + std::to_string(not_tight) +
               " pass below min q" + (first.empty() ? "" : "; first: " + first);
  return res;
}

CriterionResult bad_pairs() {
  CriterionResult res{4, "bad-pair counting lemma", false, false, {}, 0, 600};
  const Hypergraph triangle = complete_uniform(3, 2);
  const std::vector<Hypergraph> desk{complete_uniform(6, 2), complete_uniform(7, 2), perfect_matchings(6),
                                     copies_of(triangle, 6), complete_uniform(12, 2)};
  std::size_t points = 0, admissible = 0, certified = 0, failures = 0, empirical_within = 0;
  std::string first;
  for (const auto& h : desk) {
    const std::size_t n = h.num_vertices();
    const unsigned r = uniformity(h).max_size;
    for (unsigned c : {4U, 8U}) {
      for (unsigned k : {1U, 2U}) {
        for (unsigned pn = 2 * r; pn + r <= n; ++pn) {
          BadPairParams params;
          params.c = Rational(c);
          params.k = k;
          params.pn = pn;
          params.q = canonical(pn, static_cast<long>(n * c));
          const BadPairReport rep = count_bad_pairs(h, params, false);
          ++points;
          bool ok = rep.counting_checks_hold();
          Count sum = 0;
          for (const auto& row : rep.rows) {
            sum += row.bad;
            ok = ok && row.bad == row.pathological + row.non_pathological;
          }
          ok = ok && sum == rep.total;
          if (rep.hypotheses.numeric() && rep.hypotheses.literal) ++admissible;
          if (rep.within_bound) ++empirical_within;
          if (rep.hypotheses.all()) {
            ++certified;
            ok = ok && rep.within_bound;
            for (const auto& row : rep.rows) ok = ok && row.pathological_holds;
          }
          if (!ok && failures++ == 0) {
            first = h.name() + " C=" + std::to_string(c) + " k=" + std::to_string(k) + " pn=" + std::to_string(pn);
          }
        }
      }
    }
  }
  // 3 (8/2)^(-1) 10 C(20, 10) = 1385670.
  const RadicalRational reg = lemma21_bound(20, 10, 2, Rational(8), 10);
  const bool regression = reg.radicand == 1 && reg.coef == 1385670;
  res.passed = failures == 0 && certified > 0 && regression;
  res.detail = std::to_string(points) + " grid points, " + std::to_string(admissible) + " meet the numeric hypotheses, " +
               std::to_string(certified) + " also certified, " + std::to_string(failures) + " failures, " +
               std::to_string(empirical_within) + " within the bound, regression " + (regression ? "ok" : "FAILED") +
               (first.empty() ? "" : "; first: " + first);
  return res;
}

CriterionResult expectation_identity(std::size_t count) {
  CriterionResult res{5, "expectation identity", false, false, {}, 0, 0};
  std::size_t instances = 0, failures = 0;
  const Hypergraph k6 = complete_uniform(6, 2);
  const Rational k6_value = expected_S(k6, VertexSet::from_sorted({0, 1}), 2, 0);
  const bool k6_ok = k6_value == 6 && expected_S_oracle(k6, VertexSet::from_sorted({0, 1}), 2, 0) == 6;
  ++instances;
  for (std::size_t i = 0; instances < count; ++i) {
    Rng rng(derive_seed(kSeed + 5, i));
    const unsigned n = 4 + static_cast<unsigned>(rng.below(7));
    const unsigned r = 1 + static_cast<unsigned>(rng.below(std::min(4U, n - 1)));
    const std::size_t m = 1 + rng.below(10);
    const Hypergraph h = random_hypergraph(n, r, m, rng.next());
    const VertexSet& s = h.edge(rng.below(h.size()));
    const unsigned w = static_cast<unsigned>(rng.below(n - r + 1));
    const unsigned k = static_cast<unsigned>(rng.below(r + 1));
    ++instances;
    if (expected_S(h, s, w, k) != expected_S_oracle(h, s, w, k)) ++failures;
  }
  res.passed = k6_ok && failures == 0 && instances >= 100;
  res.detail = std::to_string(instances) + " instances, " + std::to_string(failures) + " mismatches, K6 w=2 value " +
               spreadlab::to_string(k6_value);
  return res;
}

struct TraceSetup {
  Hypergraph h;
  std::vector<unsigned> seq;
  Rational q;
  Rational c;
};

std::vector<TraceSetup> trace_setups() {
  std::vector<Hypergraph> hs{complete_uniform(8, 2), complete_uniform(10, 2), complete_uniform(8, 3),
                             complete_uniform(9, 3),  complete_uniform(10, 3), complete_uniform(9, 4),
                             complete_uniform(10, 4), perfect_matchings(6)};
  for (std::uint64_t i = 0; i < 4; ++i) {
    Rng rng(derive_seed(kSeed + 6, i));
    const unsigned n = 8 + static_cast<unsigned>(rng.below(3));
    const unsigned r = 3 + static_cast<unsigned>(rng.below(2));
    hs.push_back(random_hypergraph(n, r, 10 + rng.below(20), rng.next()));
  }
  std::vector<TraceSetup> out;
  for (const auto& h : hs) {
    const unsigned r1 = uniformity(h).max_size;
    std::vector<std::vector<unsigned>> seqs{{r1, 1}};
    if (r1 >= 3) seqs.push_back({r1, (r1 + 1) / 2, 1});
    for (const auto& seq : seqs) {
      const Rational q = root_upper(min_q_tiered(h, seq).q);
      if (q <= 0) continue;
      for (long d : {2L, 4L}) {
        Rational c = Rational(1) / (Rational(d) * q);
        c.canonicalize();
        out.push_back({h, seq, q, c});
      }
    }
  }
  return out;
}

CriterionResult fragmentation_invariants(std::size_t want) {
  CriterionResult res{6, "fragmentation invariants", false, false, {}, 0, 300};
  const auto setups = trace_setups();
  const std::size_t per = (want + setups.size() - 1) / setups.size();
  std::size_t traces = 0, failures = 0, preserved = 0, uncertified = 0;
  std::string first;
  for (std::size_t si = 0; si < setups.size(); ++si) {
    const auto& s = setups[si];
    if (!certify_tiered(s.h, SpreadProfile::tiered(s.q, s.seq)).passed()) {
      ++uncertified;
      continue;
    }
    for (std::size_t t = 0; t < per; ++t) {
      const FragmentationTrace trace = run_fragmentation(s.h, s.seq, s.q, s.c, derive_seed(kSeed + si, t));
      ++traces;
      const TraceCheck tc = check_trace_invariants(s.h, trace);
      bool ok = tc.ok();
      if (s.h.num_vertices() <= 10) {
        for (const auto& e : check_spread_preservation(s.h, trace, s.q)) {
          if (e.stage == 1) continue;
          if (e.status == PreservationStatus::pass) ++preserved;
          if (e.status == PreservationStatus::fail || e.status == PreservationStatus::no_violation_found) ok = false;
        }
      }
      if (!ok && failures++ == 0) {
        first = s.h.name() + " seed index " + std::to_string(t) + (tc.problems.empty() ? "" : ": " + tc.problems.front());
      }
    }
  }
  res.passed = failures == 0 && uncertified == 0 && traces >= 500 && preserved > 0;
  res.detail = std::to_string(traces) + " traces over " + std::to_string(setups.size()) + " setups, " +
               std::to_string(failures) + " failures, " + std::to_string(preserved) +
               " exact preservation passes, " + std::to_string(uncertified) + " uncertified setups" +
               (first.empty() ? "" : "; first: " + first);
  return res;
}

CriterionResult round_failures() {
  CriterionResult res{7, "round failure frequency", false, false, {}, 0, 0};
  const FailureFrequency f =
      round_failure_frequency(complete_uniform(10, 3), {3, 1}, canonical(3, 10), Rational(8), kFrequencyRuns, kSeed + 7);
  std::ostringstream os;
  os << "bound " << f.bound;
  if (f.vacuous) {
    res.vacuous = true;
    res.passed = f.bound >= 1;
    os << " >= 1, vacuous pass";
    if (!f.executed) os << " (no runs: C q exceeds 1/2)";
  } else {
    res.passed = f.frequency <= f.bound + kFrequencySigmas * f.standard_error;
    os << ", frequency " << f.frequency << " over " << f.runs << " runs";
  }
  res.detail = os.str();
  return res;
}

struct OracleCase {
  Hypergraph h;
  std::size_t size;
};

std::vector<OracleCase> oracle_grid() {
  const Hypergraph triangle = complete_uniform(3, 2);
  const Hypergraph pm4 = perfect_matchings(4), pm6 = perfect_matchings(6), hc5 = hamilton_cycles(5);
  const Hypergraph k6 = complete_uniform(6, 2), k63 = complete_uniform(6, 3), k84 = complete_uniform(8, 4);
  const Hypergraph tri5 = copies_of(triangle, 5);
  const Hypergraph r1 = random_hypergraph(8, 3, 5, kSeed + 81), r2 = random_hypergraph(10, 2, 4, kSeed + 82);
  const Hypergraph r3 = random_hypergraph(9, 4, 7, kSeed + 83);
  return {{pm4, 2},  {pm4, 4},  {pm6, 5},  {pm6, 7},  {pm6, 9},  {hc5, 5},  {hc5, 7},
          {k6, 2},   {k63, 3},  {k84, 4},  {k84, 5},  {tri5, 4}, {tri5, 6}, {r1, 3},
          {r1, 4},   {r1, 5},   {r2, 3},   {r2, 5},   {r3, 4},   {r3, 6}};
}

bool inside(const ThresholdEstimate& e, const Rational& exact) {
  const double x = exact.get_d();
  return e.lo <= x && x <= e.hi;
}

CriterionResult calibration() {
  CriterionResult res{8, "Monte Carlo calibration", false, false, {}, 0, 0};
  const Hypergraph pm4 = perfect_matchings(4);
  const Rational pm4_exact = exact_containment(pm4, 3).probability;
  const bool pm4_ok = pm4_exact == canonical(12, 20) &&
                      inside(estimate_containment(pm4, 3, kCalibrationTrials, kSeed + 8, kWilsonConfidence), pm4_exact);
  const auto grid = oracle_grid();
  unsigned hits = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& g = grid[i];
    const auto e = estimate_containment(g.h, g.size, kCalibrationTrials, derive_seed(kSeed + 8, i), kWilsonConfidence);
    if (inside(e, exact_containment(g.h, g.size).probability)) ++hits;
  }
  res.passed = pm4_ok && grid.size() == 20 && hits >= kCalibrationRequired;
  res.detail = std::string("PM(4) size 3 exact ") + spreadlab::to_string(pm4_exact) + (pm4_ok ? " inside" : " NOT inside") +
               " its interval; grid " + std::to_string(hits) + "/" + std::to_string(grid.size()) + " inside";
  return res;
}

CriterionResult monotonicity() {
  CriterionResult res{9, "containment monotonicity", false, false, {}, 0, 0};
  std::vector<Hypergraph> hs;
  for (const auto& g : oracle_grid()) {
    if (std::find(hs.begin(), hs.end(), g.h) == hs.end()) hs.push_back(g.h);
  }
  std::size_t exact_violations = 0, pairs = 0, scan_violations = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const auto& h = hs[i];
    std::vector<std::size_t> sizes(h.num_vertices() + 1);
    for (std::size_t s = 0; s < sizes.size(); ++s) sizes[s] = s;
    Rational prev(0);
    for (std::size_t s : sizes) {
      const Rational p = exact_containment(h, s).probability;
      if (p < prev) ++exact_violations;
      prev = p;
    }
    const auto scan = threshold_scan(h, sizes, kScanTrials, derive_seed(kSeed + 9, i));
    for (std::size_t s = 0; s + 1 < scan.size(); ++s) {
      ++pairs;
      const double se = std::hypot(scan[s].standard_error, scan[s + 1].standard_error);
      if (scan[s + 1].p_hat < scan[s].p_hat - kScanSigmas * se) ++scan_violations;
    }
  }
  const double rate = pairs ? static_cast<double>(scan_violations) / static_cast<double>(pairs) : 1.0;
  res.passed = exact_violations == 0 && rate <= kScanViolationRate;
  res.detail = std::to_string(hs.size()) + " instances, " + std::to_string(exact_violations) +
               " exact decreases, scan " + std::to_string(scan_violations) + "/" + std::to_string(pairs) +
               " adjacent pairs beyond 3 stderr";
  return res;
}

std::string sha256_file(const std::filesystem::path& p) {
  const std::string data = read_text(p);
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw ResourceError("SHA-256 digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

CriterionResult determinism() {
  CriterionResult res{10, "CLI determinism", false, false, {}, 0, 0};
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("spreadlab-accept-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string g = (dir / "g.json").string();
  const std::vector<std::pair<std::vector<std::string>, std::string>> commands{
      {{"generate", "--family", "random", "--n", "10", "--r", "3", "--m", "12", "--seed", "7", "--output", g}, g},
      {{"certify", "--mode", "q", "--q", "1/2", "--input", g, "--samples", "500", "--seed", "3", "--output",
        (dir / "c.json").string()},
       (dir / "c.json").string()},
      {{"fragment", "--input", g, "--r-seq", "3,1", "--q", "1/4", "--C", "2", "--seed", "11", "--trials", "4",
        "--output", (dir / "f.jsonl").string()},
       (dir / "f.jsonl").string()},
      {{"threshold", "--input", g, "--sizes", "3,5,7", "--trials", "2000", "--seed", "5", "--exact", "--bounds",
        "C=2,l=2,q=0.25,rseq=3,1", "--output", (dir / "t.csv").string()},
       (dir / "t.csv").string()},
      {{"threshold", "--input", g, "--sizes", "2,4,6,8", "--trials", "1000", "--seed", "9", "--format", "json",
        "--output", (dir / "t.json").string()},
       (dir / "t.json").string()},
  };
  std::vector<std::string> first, second;
  bool exits_ok = true;
  std::ostringstream sink, errs;
  for (auto* hashes : {&first, &second}) {
    for (const auto& [argv, artifact] : commands) {
      const int code = cli::run(argv, sink, errs);
      exits_ok = exits_ok && (code == cli::kOk || code == cli::kVerdictFail);
      hashes->push_back(fs::exists(artifact) ? sha256_file(artifact) : std::string("missing"));
    }
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  std::size_t same = 0;
  for (std::size_t i = 0; i < first.size(); ++i) same += first[i] == second[i] && first[i] != "missing";
  res.passed = exits_ok && same == commands.size();
  res.detail = std::to_string(same) + "/" + std::to_string(commands.size()) + " artifacts byte-identical" +
               (exits_ok ? "" : "; a command exited with an error: " + errs.str());
  return res;
}

}  // namespace

const char* to_string(Profile p) { return p == Profile::quick ? "quick" : "full"; }

Profile parse_profile(const std::string& text) {
  if (text == "quick") return Profile::quick;
  if (text == "full") return Profile::full;
  throw InputError("profile must be quick or full, got '" + text + "'");
}

bool Report::all_passed() const {
  return !criteria.empty() && std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed; });
}

Report run(Profile profile, const std::function<void(const CriterionResult&)>& on_result) {
  const Sizes sz = sizes_for(profile);
  Report report;
  report.profile = profile;
  const Timer total;
  auto record = [&](const std::function<CriterionResult()>& f) {
    const Timer t;
    CriterionResult r;
    try {
      r = f();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
      r.passed = false;
    }
    r.seconds = t.seconds();
    if (r.limit_seconds > 0 && r.seconds > r.limit_seconds) {
      r.passed = false;
      r.detail += "; over the runtime limit";
    }
    if (on_result) on_result(r);
    report.criteria.push_back(std::move(r));
  };
  const auto pop = population(sz.population);
  record([&] { return tiered_implies_q(pop); });
  record([&] { return q_implies_tiered(pop); });
  record([&] { return dimension_bound(uniform_suite(pop)); });
  record([&] { return bad_pairs(); });
  record([&] { return expectation_identity(sz.expectation_instances); });
  record([&] { return fragmentation_invariants(sz.traces); });
  record([&] { return round_failures(); });
  record([&] { return calibration(); });
  record([&] { return monotonicity(); });
  record([&] { return determinism(); });
  // Ids are fixed by position even when a criterion threw before filling them in.
  for (std::size_t i = 0; i < report.criteria.size(); ++i) report.criteria[i].id = static_cast<unsigned>(i + 1);
  report.seconds = total.seconds();
  return report;
}

std::string format_line(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.1f", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " + r.detail +
         " (" + secs + " s)";
}

json to_json(const CriterionResult& r) {
  return json{{"id", r.id},         {"name", r.name},       {"passed", r.passed},
              {"vacuous", r.vacuous}, {"detail", r.detail}, {"seconds", r.seconds},
              {"limit_seconds", r.limit_seconds}};
}

json to_json(const Report& r) {
  json cs = json::array();
  for (const auto& c : r.criteria) cs.push_back(to_json(c));
  return json{{"profile", to_string(r.profile)}, {"passed", r.all_passed()}, {"seconds", r.seconds}, {"criteria", cs}};
}

}  // namespace spreadlab::acceptance
