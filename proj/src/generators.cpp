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

#include "spreadlab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "spreadlab/combinatorics.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/rng.hpp"

namespace spreadlab {

Vertex edge_label(Vertex u, Vertex v) {
  if (u == v) throw InputError("graph edge needs two distinct endpoints");
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

std::pair<Vertex, Vertex> edge_endpoints(Vertex label) {
  // Largest v with v(v-1)/2 <= label.
  auto v = static_cast<Vertex>((1.0 + std::sqrt(1.0 + 8.0 * label)) / 2.0);
  while (v * (v - 1) / 2 > label) --v;
  while ((v + 1) * v / 2 <= label) ++v;
  return {label - v * (v - 1) / 2, v};
}

std::size_t num_edge_labels(std::size_t n) { return n * (n - 1) / 2; }

Hypergraph complete_uniform(unsigned n, unsigned r) {
  if (r < 1 || r > n) throw InputError("complete_uniform needs 1 <= r <= n");
  std::vector<VertexSet> edges;
  std::vector<Vertex> c(r);
  std::iota(c.begin(), c.end(), Vertex{0});
  do {
    edges.push_back(VertexSet::from_sorted(c));
  } while (next_combination(c, n));
  return Hypergraph(n, std::move(edges), "complete_uniform(" + std::to_string(n) + "," + std::to_string(r) + ")");
}

namespace {

void extend_matching(std::vector<bool>& used, std::vector<Vertex>& labels, unsigned n,
                     std::vector<VertexSet>& out) {
  Vertex first = 0;
  while (first < n && used[first]) ++first;
  if (first == n) {
    out.push_back(VertexSet::from_unsorted(labels));
    return;
  }
  used[first] = true;
  for (Vertex partner = first + 1; partner < n; ++partner) {
    if (used[partner]) continue;
    used[partner] = true;
    labels.push_back(edge_label(first, partner));
    extend_matching(used, labels, n, out);
    labels.pop_back();
    used[partner] = false;
  }
  used[first] = false;
}

// Visits each undirected Hamilton cycle of K_n once as a vertex order starting at 0.
template <typename F>
void for_each_hamilton_cycle(unsigned n, F&& f) {
  std::vector<Vertex> rest(n - 1);
  std::iota(rest.begin(), rest.end(), Vertex{1});
  std::vector<Vertex> cycle(n);
  do {
    if (rest.front() > rest.back()) continue;  // reflection duplicate
    cycle[0] = 0;
    std::copy(rest.begin(), rest.end(), cycle.begin() + 1);
    f(cycle);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

Hypergraph perfect_matchings(unsigned n) {
  if (n % 2 != 0 || n < 2 || n > 12) throw InputError("perfect_matchings needs even n in [2, 12]");
  std::vector<VertexSet> edges;
  std::vector<bool> used(n, false);
  std::vector<Vertex> labels;
  extend_matching(used, labels, n, edges);
  return Hypergraph(num_edge_labels(n), std::move(edges), "perfect_matchings(" + std::to_string(n) + ")");
}

Hypergraph hamilton_cycles(unsigned n) {
  if (n < 3 || n > 9) throw InputError("hamilton_cycles needs 3 <= n <= 9");
  std::vector<VertexSet> edges;
  for_each_hamilton_cycle(n, [&](const std::vector<Vertex>& c) {
    std::vector<Vertex> labels;
    for (unsigned i = 0; i < n; ++i) labels.push_back(edge_label(c[i], c[(i + 1) % n]));
    edges.push_back(VertexSet::from_unsorted(std::move(labels)));
  });
  return Hypergraph(num_edge_labels(n), std::move(edges), "hamilton_cycles(" + std::to_string(n) + ")");
}

Hypergraph hamilton_squares(unsigned n) {
  if (n < 5 || n > 9) throw InputError("hamilton_squares needs 5 <= n <= 9");
  std::vector<VertexSet> edges;
  for_each_hamilton_cycle(n, [&](const std::vector<Vertex>& c) {
    std::vector<Vertex> labels;
    for (unsigned i = 0; i < n; ++i) {
      labels.push_back(edge_label(c[i], c[(i + 1) % n]));
      labels.push_back(edge_label(c[i], c[(i + 2) % n]));
    }
    edges.push_back(VertexSet::from_unsorted(std::move(labels)));
  });
  return Hypergraph(num_edge_labels(n), std::move(edges), "hamilton_squares(" + std::to_string(n) + ")");
}

Hypergraph copies_of(const Hypergraph& f, unsigned n, std::uint64_t budget) {
  const auto fn = static_cast<unsigned>(f.num_vertices());
  if (fn > n) throw InputError("pattern graph has more vertices than K_n");
  if (f.empty()) throw InputError("pattern graph needs at least one edge");
  std::set<VertexSet> seen_pattern_edges;
  for (const auto& e : f.edges()) {
    if (e.size() != 2) throw InputError("pattern graph must be 2-uniform");
    if (!seen_pattern_edges.insert(e).second) throw InputError("pattern graph must be simple");
  }
  std::uint64_t embeddings = 1;
  for (unsigned i = 0; i < fn; ++i) {
    embeddings = (embeddings > kSaturated / (n - i)) ? kSaturated : embeddings * (n - i);
  }
  if (embeddings > budget) {
    throw ResourceError("copies_of needs " + std::to_string(embeddings) + " embeddings, budget is " +
                        std::to_string(budget));
  }

  std::set<VertexSet> images;
  std::vector<Vertex> image(fn);
  std::vector<bool> used(n, false);
  auto place = [&](auto&& self, unsigned slot) -> void {
    if (slot == fn) {
      std::vector<Vertex> labels;
      labels.reserve(f.size());
      for (const auto& e : f.edges()) labels.push_back(edge_label(image[e[0]], image[e[1]]));
      images.insert(VertexSet::from_unsorted(std::move(labels)));
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      image[slot] = v;
      self(self, slot + 1);
      used[v] = false;
    }
  };
  place(place, 0);
  std::vector<VertexSet> edges(images.begin(), images.end());
  std::string name = "copies_of(" + (f.name().empty() ? std::string("F") : f.name()) + "," + std::to_string(n) + ")";
  return Hypergraph(num_edge_labels(n), std::move(edges), std::move(name));
}

Hypergraph random_hypergraph(unsigned n, unsigned r, std::size_t m, std::uint64_t seed) {
  if (r > n) throw InputError("random_hypergraph needs r <= n");
  if (m < 1) throw InputError("random_hypergraph needs m >= 1");
  Rng rng(seed);
  std::vector<Vertex> pool(n);
  std::vector<VertexSet> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::iota(pool.begin(), pool.end(), Vertex{0});
    edges.push_back(VertexSet::from_bits(random_subset_bits(rng, pool, r)));
  }
  return Hypergraph(n, std::move(edges),
                    "random(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(m) + "," +
                        std::to_string(seed) + ")");
}

}  // namespace spreadlab
