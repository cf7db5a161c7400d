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

// Serial reference kernels against the OpenMP ones on the same inputs.

#include <benchmark/benchmark.h>

#include "spreadlab/badpairs.hpp"
#include "spreadlab/generators.hpp"
#include "spreadlab/parallel.hpp"
#include "spreadlab/reference.hpp"
#include "spreadlab/spread.hpp"
#include "spreadlab/threshold.hpp"

namespace {

using namespace spreadlab;

void job_counts(benchmark::internal::Benchmark* b) {
  b->Arg(1);
  if (available_processors() > 1) b->Arg(available_processors());
}

const Hypergraph& pm8() {
  static const Hypergraph h = perfect_matchings(8);  // 105 edges on 28 labels
  return h;
}

const Hypergraph& k12() {
  static const Hypergraph h = complete_uniform(12, 3);
  return h;
}

void BM_CertifySerial(benchmark::State& state) {
  const Rational q(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(reference::is_q_spread(k12(), q));
}
BENCHMARK(BM_CertifySerial)->Unit(benchmark::kMillisecond);

void BM_CertifyParallel(benchmark::State& state) {
  set_jobs(static_cast<int>(state.range(0)));
  const Rational q(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(certify_q_spread(k12(), q).passed());
}
BENCHMARK(BM_CertifyParallel)->Apply(job_counts)->Unit(benchmark::kMillisecond);

BadPairParams pm6_params() {
  BadPairParams p;
  p.c = Rational(4);
  p.q = Rational(7, 60);
  p.k = 1;
  p.pn = 7;
  return p;
}

void BM_BadPairsSerial(benchmark::State& state) {
  const Hypergraph h = perfect_matchings(6);
  const BadPairReport rep = count_bad_pairs(h, pm6_params(), false);
  std::vector<RadicalRational> thresholds(rep.r + 1);
  for (const auto& row : rep.rows) thresholds[row.t] = row.n_threshold;
  for (auto _ : state) benchmark::DoNotOptimize(reference::count_bad_pairs(h, 1, 7, thresholds));
}
BENCHMARK(BM_BadPairsSerial)->Unit(benchmark::kMillisecond);

void BM_BadPairsParallel(benchmark::State& state) {
  set_jobs(static_cast<int>(state.range(0)));
  const Hypergraph h = perfect_matchings(6);
  for (auto _ : state) benchmark::DoNotOptimize(count_bad_pairs(h, pm6_params(), false).total);
}
BENCHMARK(BM_BadPairsParallel)->Apply(job_counts)->Unit(benchmark::kMillisecond);

void BM_MonteCarloSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::containment_successes(pm8(), 12, 20000, 1));
}
BENCHMARK(BM_MonteCarloSerial)->Unit(benchmark::kMillisecond);

void BM_MonteCarloParallel(benchmark::State& state) {
  set_jobs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_containment(pm8(), 12, 20000, 1).successes);
}
BENCHMARK(BM_MonteCarloParallel)->Apply(job_counts)->Unit(benchmark::kMillisecond);

void BM_ExactSerial(benchmark::State& state) {
  const Hypergraph h = perfect_matchings(6);
  for (auto _ : state) benchmark::DoNotOptimize(reference::exact_containment(h, 7));
}
BENCHMARK(BM_ExactSerial)->Unit(benchmark::kMillisecond);

void BM_ExactParallel(benchmark::State& state) {
  set_jobs(static_cast<int>(state.range(0)));
  const Hypergraph h = perfect_matchings(6);
  for (auto _ : state) benchmark::DoNotOptimize(containment_by_enumeration(h, 7));
}
BENCHMARK(BM_ExactParallel)->Apply(job_counts)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
