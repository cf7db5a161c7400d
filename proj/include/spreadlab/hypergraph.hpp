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

#ifndef SPREADLAB_HYPERGRAPH_HPP
#define SPREADLAB_HYPERGRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "spreadlab/vertex_set.hpp"

namespace spreadlab {

using Count = std::uint64_t;

// Vertices are the dense labels 0..n-1; edges form an ordered multiset.
// Immutable after construction, so a Hypergraph can be shared by concurrent
// readers. Each edge is held twice: as a sorted label list for interchange and
// as a bit vector for the counting kernels.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Throws InputError if a label is out of range or n exceeds kMaxVertices.
  Hypergraph(std::size_t n, std::vector<VertexSet> edges, std::string name = {});

  std::size_t num_vertices() const { return n_; }
  // Number of edges counted with multiplicity.
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const VertexSet& edge(std::size_t i) const { return edges_[i]; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexBits& edge_bits(std::size_t i) const { return bits_[i]; }
  std::span<const VertexBits> all_edge_bits() const { return bits_; }

  const std::string& name() const { return name_; }
  Hypergraph with_name(std::string name) const;

  // Largest number of copies of a single edge (the m of the vertex-count
  // bound), computed from a canonical-edge frequency map.
  Count max_multiplicity() const;

  // Index of the first edge equal to `s` as a set, or size() if absent.
  std::size_t find_edge(const VertexSet& s) const;

  // Throws InputError when A has a label outside [0, n).
  void validate(const VertexSet& a) const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.name_ == b.name_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
  std::vector<VertexBits> bits_;
  std::string name_;
};

enum class CountMode { exactly, at_least };

// d(A): edges containing A, with multiplicity.
Count degree(const Hypergraph& h, const VertexSet& a);

// at_least: M_j(A) = #{S : |A ∩ S| >= j}; exactly: m_j(A) = #{S : |A ∩ S| = j}.
Count m_count(const Hypergraph& h, const VertexSet& a, unsigned j, CountMode mode);

// Histogram over j = 0..|A| of m_j(A). Sums to |H|.
std::vector<Count> intersection_profile(const Hypergraph& h, const VertexSet& a);
// Same, on a precomputed bit vector; `out` must have size >= |A| + 1 and is overwritten.
void intersection_profile(const Hypergraph& h, const VertexBits& a, std::span<Count> out);

// Turns a histogram of m_j into the tail sums M_j in place.
void tail_sums(std::span<Count> histogram);

struct Uniformity {
  unsigned min_size = 0;  // s
  unsigned max_size = 0;  // r
  bool uniform() const { return min_size == max_size; }
};

// Throws InputError on an empty hypergraph.
Uniformity uniformity(const Hypergraph& h);

// Every A with d(A) > 0 and min_size <= |A| <= max_size, each exactly once,
// i.e. the union over edges S of the subsets of S in the size range.
// Streaming form visits in unspecified order; the VertexSet form is sorted.
std::vector<VertexBits> candidate_bits(const Hypergraph& h, unsigned min_size, unsigned max_size);
void for_each_candidate_set(const Hypergraph& h, unsigned min_size, unsigned max_size,
                            const std::function<void(const VertexBits&)>& visit);
std::vector<VertexSet> candidate_sets(const Hypergraph& h, unsigned min_size, unsigned max_size);

// Upper bound on the number of candidate sets: sum over distinct edges of the
// number of subsets in the size range. Used for budget checks.
double candidate_set_cost(const Hypergraph& h, unsigned min_size, unsigned max_size);

// Distinct edges as bit vectors, first-occurrence order.
std::vector<VertexBits> distinct_edge_bits(const Hypergraph& h);

}  // namespace spreadlab

#endif  // SPREADLAB_HYPERGRAPH_HPP
