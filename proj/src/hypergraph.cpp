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

#include "spreadlab/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "spreadlab/errors.hpp"

namespace spreadlab {

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges, std::string name)
    : n_(n), edges_(std::move(edges)), name_(std::move(name)) {
  if (n_ > kMaxVertices) {
    throw InputError("hypergraph has " + std::to_string(n_) + " vertices; at most " +
                     std::to_string(kMaxVertices) + " are supported");
  }
  bits_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (Vertex v : edges_[i]) {
      if (v >= n_) {
        throw InputError("edge " + std::to_string(i) + " has label " + std::to_string(v) +
                         " outside [0, " + std::to_string(n_) + ")");
      }
    }
    bits_.push_back(edges_[i].bits());
  }
}

Hypergraph Hypergraph::with_name(std::string name) const {
  Hypergraph h = *this;
  h.name_ = std::move(name);
  return h;
}

Count Hypergraph::max_multiplicity() const {
  std::unordered_map<VertexBits, Count, bits::Hash> freq;
  Count best = 0;
  for (const auto& b : bits_) best = std::max(best, ++freq[b]);
  return best;
}

std::size_t Hypergraph::find_edge(const VertexSet& s) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] == s) return i;
  }
  return edges_.size();
}

void Hypergraph::validate(const VertexSet& a) const {
  for (Vertex v : a) {
    if (v >= n_) {
      throw InputError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
    }
  }
}

Count degree(const Hypergraph& h, const VertexSet& a) {
  h.validate(a);
  const VertexBits ab = a.bits();
  Count d = 0;
  for (const auto& e : h.all_edge_bits()) d += bits::is_subset(ab, e) ? 1 : 0;
  return d;
}

Count m_count(const Hypergraph& h, const VertexSet& a, unsigned j, CountMode mode) {
  h.validate(a);
  const VertexBits ab = a.bits();
  Count c = 0;
  for (const auto& e : h.all_edge_bits()) {
    const unsigned t = bits::intersection_count(ab, e);
    c += (mode == CountMode::exactly ? t == j : t >= j) ? 1 : 0;
  }
  return c;
}

void intersection_profile(const Hypergraph& h, const VertexBits& a, std::span<Count> out) {
  std::fill(out.begin(), out.end(), Count{0});
  for (const auto& e : h.all_edge_bits()) ++out[bits::intersection_count(a, e)];
}

std::vector<Count> intersection_profile(const Hypergraph& h, const VertexSet& a) {
  h.validate(a);
  std::vector<Count> hist(a.size() + 1, 0);
  intersection_profile(h, a.bits(), hist);
  return hist;
}

void tail_sums(std::span<Count> histogram) {
  Count acc = 0;
  for (std::size_t j = histogram.size(); j-- > 0;) {
    acc += histogram[j];
    histogram[j] = acc;
  }
}

Uniformity uniformity(const Hypergraph& h) {
  if (h.empty()) throw InputError("uniformity of an empty hypergraph is undefined");
  Uniformity u{static_cast<unsigned>(h.edge(0).size()), static_cast<unsigned>(h.edge(0).size())};
  for (const auto& e : h.edges()) {
    u.min_size = std::min(u.min_size, static_cast<unsigned>(e.size()));
    u.max_size = std::max(u.max_size, static_cast<unsigned>(e.size()));
  }
  return u;
}

std::vector<VertexBits> distinct_edge_bits(const Hypergraph& h) {
  std::unordered_set<VertexBits, bits::Hash> seen;
  std::vector<VertexBits> out;
  for (const auto& e : h.all_edge_bits()) {
    if (seen.insert(e).second) out.push_back(e);
  }
  return out;
}

namespace {

// Visits every k-subset of the positions 0..r-1 as a bit mask (Gosper's hack).
template <typename F>
void for_each_mask(unsigned r, unsigned k, F&& f) {
  if (k > r) return;
  if (k == 0) {
    f(std::uint64_t{0});
    return;
  }
  std::uint64_t mask = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  const std::uint64_t limit = (r == 64) ? 0 : (std::uint64_t{1} << r);
  while (true) {
    f(mask);
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t nx = mask + c;
    if (nx == 0) break;
    mask = (((nx ^ mask) >> 2) / c) | nx;
    if (limit != 0 && mask >= limit) break;
  }
}

}  // namespace

std::vector<VertexBits> candidate_bits(const Hypergraph& h, unsigned min_size, unsigned max_size) {
  std::vector<VertexBits> out;
  for (const auto& edge_bits : distinct_edge_bits(h)) {
    const VertexSet edge = VertexSet::from_bits(edge_bits);
    const auto r = static_cast<unsigned>(edge.size());
    if (r > 63) throw ResourceError("edge too large for subset enumeration");
    for (unsigned k = min_size; k <= std::min(max_size, r); ++k) {
      for_each_mask(r, k, [&](std::uint64_t mask) {
        VertexBits a{};
        for (std::uint64_t m = mask; m != 0; m &= m - 1) {
          bits::set(a, edge[static_cast<std::size_t>(std::countr_zero(m))]);
        }
        out.push_back(a);
      });
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void for_each_candidate_set(const Hypergraph& h, unsigned min_size, unsigned max_size,
                            const std::function<void(const VertexBits&)>& visit) {
  for (const auto& a : candidate_bits(h, min_size, max_size)) visit(a);
}

std::vector<VertexSet> candidate_sets(const Hypergraph& h, unsigned min_size, unsigned max_size) {
  std::vector<VertexSet> out;
  for (const auto& a : candidate_bits(h, min_size, max_size)) out.push_back(VertexSet::from_bits(a));
  std::sort(out.begin(), out.end());
  return out;
}

double candidate_set_cost(const Hypergraph& h, unsigned min_size, unsigned max_size) {
  double total = 0;
  for (const auto& e : distinct_edge_bits(h)) {
    const unsigned r = bits::count(e);
    double row = 0;
    double c = 1;  // C(r, k) built incrementally
    for (unsigned k = 0; k <= r; ++k) {
      if (k >= min_size && k <= max_size) row += c;
      c = c * (r - k) / (k + 1);
    }
    total += row;
  }
  return total;
}

}  // namespace spreadlab
