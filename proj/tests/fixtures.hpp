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

#ifndef SPREADLAB_TESTS_FIXTURES_HPP
#define SPREADLAB_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <vector>

#include "spreadlab/hypergraph.hpp"
#include "spreadlab/rational.hpp"

namespace fixtures {

inline spreadlab::Rational rat(long num, long den) {
  spreadlab::Rational q(num, den);
  q.canonicalize();
  return q;
}

inline spreadlab::VertexSet vs(std::initializer_list<spreadlab::Vertex> labels) {
  return spreadlab::VertexSet::from_unsorted(std::vector<spreadlab::Vertex>(labels));
}

inline spreadlab::Hypergraph make(std::size_t n, std::initializer_list<std::initializer_list<spreadlab::Vertex>> edges) {
  std::vector<spreadlab::VertexSet> e;
  for (auto edge : edges) e.push_back(vs(edge));
  return spreadlab::Hypergraph(n, std::move(e));
}

// All pairs of {0, ..., n-1}, built by hand rather than by the generator.
inline spreadlab::Hypergraph pairs(unsigned n) {
  std::vector<spreadlab::VertexSet> e;
  for (spreadlab::Vertex a = 0; a < n; ++a) {
    for (spreadlab::Vertex b = a + 1; b < n; ++b) e.push_back(spreadlab::VertexSet::from_sorted({a, b}));
  }
  return spreadlab::Hypergraph(n, std::move(e));
}

}  // namespace fixtures

#endif  // SPREADLAB_TESTS_FIXTURES_HPP
