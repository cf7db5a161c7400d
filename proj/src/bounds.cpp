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

#include "spreadlab/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "spreadlab/errors.hpp"

namespace spreadlab {

namespace {

BoundValue make(std::string source, unsigned index, double raw, bool applicable, std::string note = {}) {
  BoundValue b;
  b.source = std::move(source);
  b.index = index;
  b.applicable = applicable;
  b.raw = raw;
  b.value = std::clamp(raw, 0.0, 1.0);
  b.clamped = applicable && b.value != raw;
  b.note = std::move(note);
  return b;
}

BoundValue missing(std::string source, std::string what) {
  BoundValue b;
  b.source = std::move(source);
  b.note = "missing " + what;
  return b;
}

}  // namespace

const BoundValue* BoundSet::find(const std::string& source, unsigned index) const {
  for (const auto& v : values) {
    if (v.source == source && v.index == index) return &v;
  }
  return nullptr;
}

BoundSet evaluate_bounds(const BoundParams& params) {
  BoundSet set;
  set.params = params;
  const auto& rs = params.r_sequence;
  // 0 marks an absent l or r.
  const unsigned levels = params.levels.value_or(static_cast<unsigned>(rs.size()));
  if (params.levels && (levels == 0 || (!rs.empty() && rs.size() < levels))) {
    throw InputError("l must be between 1 and the length of the r-sequence");
  }

  // Fragmentation bounds for W of size 2 C l q n.
  const char* uniform_src = "fragmentation_uniform_endgame";
  const char* small_src = "fragmentation_small_endgame";
  if (!params.c || !levels || rs.empty()) {
    set.values.push_back(missing(uniform_src, "C, l or r-sequence"));
    set.values.push_back(missing(small_src, "C, l or r-sequence"));
  } else {
    const double c = *params.c;
    const double l = levels;
    const bool c_ok = c >= 8;
    const double r_last = rs[levels - 1];
    set.values.push_back(make(uniform_src, 0, 1 - 6 * l * l * std::pow(c / 4, -r_last / 2) - 40 / (c * l), c_ok,
                              c_ok ? "" : "needs C >= 8"));
    for (unsigned i = 1; i <= levels; ++i) {
      const double ri = rs[i - 1];
      const bool ok = c_ok && 4 * ri <= c * l;
      std::string note = !c_ok ? "needs C >= 8" : (ok ? "" : "needs 4 r_i <= C l");
      set.values.push_back(make(small_src, i, 1 - 6 * l * l * std::pow(c / 4, -ri / 2) - 2 * std::exp(-c * l / (4 * ri)),
                                ok, std::move(note)));
    }
  }

  // Single random set of size alpha n.
  const unsigned r = params.r.value_or(rs.empty() ? 0U : rs.front());
  if (!params.alpha || !params.q || !r) {
    set.values.push_back(missing("small_edges", "alpha, q or r"));
  } else {
    const double a = *params.alpha, q = *params.q;
    const bool ok = a > 0 && a < 1 && a >= 2 * r * q;
    set.values.push_back(make("small_edges", 0, 1 - 2 * std::exp(-a / (2 * r * q)), ok,
                              ok ? "" : "needs 0 < alpha < 1 and alpha >= 2 r q"));
  }
  if (!params.alpha || !params.q || !params.n) {
    set.values.push_back(missing("second_moment", "alpha, q or n"));
  } else {
    const double a = *params.alpha, q = *params.q;
    const bool ok = a > 0 && a < 1 && a >= 4 * q;
    set.values.push_back(make("second_moment", 0, 1 - 4 * q / a - 2 * std::exp(-a * static_cast<double>(*params.n) / 4),
                              ok, ok ? "" : "needs 0 < alpha < 1 and alpha >= 4 q"));
  }

  if (params.k0) {
    const double k0 = *params.k0;
    if (!params.c || !levels) {
      auto b = missing("nonuniform_conditional", "C or l");
      b.conditional = true;
      set.values.push_back(std::move(b));
    } else {
      const double c = *params.c;
      const bool ok = c >= k0;
      auto b = make("nonuniform_conditional", 0, 1 - k0 / (c * levels), ok, ok ? "" : "needs C >= K0");
      b.conditional = true;
      set.values.push_back(std::move(b));
    }
    if (!params.c || params.q_levels.empty()) {
      auto b = missing("multilevel_conditional", "C or q levels");
      b.conditional = true;
      set.values.push_back(std::move(b));
    } else {
      const double c = *params.c;
      const auto& qs = params.q_levels;
      const double qmax = *std::max_element(qs.begin(), qs.end());
      double sum = 0;
      for (double q : qs) sum += q;
      const double big_l = sum / qmax;
      const bool ok = c >= k0;
      auto b = make("multilevel_conditional", 0,
                    1 - k0 * std::log(static_cast<double>(qs.size()) + 1) / (c * big_l), ok,
                    ok ? "" : "needs C >= K0");
      b.conditional = true;
      set.values.push_back(std::move(b));
    }
  }
  return set;
}

json to_json(const BoundValue& b) {
  json j{{"source", b.source}, {"applicable", b.applicable}, {"conditional", b.conditional}};
  if (b.index) j["i"] = b.index;
  if (b.applicable) {
    j["value"] = b.value;
    j["raw"] = b.raw;
    j["clamped"] = b.clamped;
  }
  if (!b.note.empty()) j["note"] = b.note;
  return j;
}

json to_json(const BoundSet& b) {
  json values = json::array();
  for (const auto& v : b.values) values.push_back(to_json(v));
  json params;
  const BoundParams& p = b.params;
  if (p.c) params["C"] = *p.c;
  if (p.levels) params["l"] = *p.levels;
  if (p.q) params["q"] = *p.q;
  if (!p.r_sequence.empty()) params["r_sequence"] = p.r_sequence;
  if (p.alpha) params["alpha"] = *p.alpha;
  if (p.r) params["r"] = *p.r;
  if (p.n) params["n"] = *p.n;
  if (p.k0) params["K0"] = *p.k0;
  if (!p.q_levels.empty()) params["q_levels"] = p.q_levels;
  return json{{"bounds", std::move(values)}, {"parameters", std::move(params)}};
}

}  // namespace spreadlab
