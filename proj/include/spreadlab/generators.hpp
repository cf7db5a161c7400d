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

#ifndef SPREADLAB_GENERATORS_HPP
#define SPREADLAB_GENERATORS_HPP

#include <cstdint>
#include <utility>

#include "spreadlab/hypergraph.hpp"

namespace spreadlab {

inline constexpr std::uint64_t kDefaultCopyBudget = 50'000'000;

// Graph-edge labels: the pair {u, v}, u < v, of K_n maps to v(v-1)/2 + u
// (colexicographic order), a bijection onto [0, C(n, 2)).
Vertex edge_label(Vertex u, Vertex v);
std::pair<Vertex, Vertex> edge_endpoints(Vertex label);
std::size_t num_edge_labels(std::size_t n);

// All r-subsets of [0, n) in lexicographic order.
Hypergraph complete_uniform(unsigned n, unsigned r);

// The (n-1)!! perfect matchings of K_n on C(n, 2) graph-edge labels. n even, n <= 12.
Hypergraph perfect_matchings(unsigned n);

// One n-uniform edge per undirected Hamilton cycle of K_n; 3 <= n <= 9.
// Cycles are the permutations fixing vertex 0 with second vertex smaller than
// the last, visited in lexicographic order.
Hypergraph hamilton_cycles(unsigned n);

// Squares of the same cycles (cycle edges plus distance-2 chords), one edge
// per cycle; 5 <= n <= 9.
Hypergraph hamilton_squares(unsigned n);

// Distinct copies of the graph F (a 2-uniform hypergraph on f <= n vertices)
// in K_n, each as its set of graph-edge labels, sorted. Throws ResourceError
// when the n!/(n-f)! embeddings exceed `budget`.
Hypergraph copies_of(const Hypergraph& f, unsigned n, std::uint64_t budget = kDefaultCopyBudget);

// m edges drawn uniformly with replacement from the r-subsets of [0, n).
Hypergraph random_hypergraph(unsigned n, unsigned r, std::size_t m, std::uint64_t seed);

}  // namespace spreadlab

#endif  // SPREADLAB_GENERATORS_HPP
