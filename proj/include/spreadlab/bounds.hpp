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

#ifndef SPREADLAB_BOUNDS_HPP
#define SPREADLAB_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "spreadlab/io.hpp"

namespace spreadlab {

// Inputs for the closed-form containment bounds. Fields left empty make the
// dependent bounds not applicable; K0 bounds are omitted without K0.
struct BoundParams {
  std::optional<double> c;
  std::optional<unsigned> levels;    // l; defaults to r_sequence.size()
  std::optional<double> q;
  std::vector<unsigned> r_sequence;  // r_1 > ... > r_l
  std::optional<double> alpha;       // |W| / n for the single-set lemmas
  std::optional<unsigned> r;         // edge size bound; defaults to r_1
  std::optional<std::size_t> n;
  std::optional<double> k0;
  std::vector<double> q_levels;      // q_1, ..., q_l for the multi-level bound
};

struct BoundValue {
  std::string source;
  unsigned index = 0;  // i for the per-level bound, else 0
  bool applicable = false;
  bool conditional = false;  // depends on the caller-supplied K0
  bool clamped = false;
  double raw = 0;
  double value = 0;  // raw clamped to [0, 1]
  std::string note;
};

struct BoundSet {
  std::vector<BoundValue> values;
  BoundParams params;

  const BoundValue* find(const std::string& source, unsigned index = 0) const;
};

// Sources: fragmentation_uniform_endgame, fragmentation_small_endgame (per i),
// small_edges, second_moment, nonuniform_conditional, multilevel_conditional.
BoundSet evaluate_bounds(const BoundParams& params);

json to_json(const BoundValue& b);
json to_json(const BoundSet& b);

}  // namespace spreadlab

#endif  // SPREADLAB_BOUNDS_HPP
