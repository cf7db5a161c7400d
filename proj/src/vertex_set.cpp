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

#include "spreadlab/vertex_set.hpp"

#include <algorithm>
#include <sstream>

#include "spreadlab/errors.hpp"

namespace spreadlab {

VertexSet VertexSet::from_sorted(std::vector<Vertex> labels) {
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i - 1] >= labels[i]) {
      throw InputError("vertex set is not strictly increasing at position " + std::to_string(i));
    }
  }
  return VertexSet(std::move(labels));
}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return VertexSet(std::move(labels));
}

VertexSet VertexSet::from_bits(const VertexBits& b) {
  std::vector<Vertex> m;
  m.reserve(bits::count(b));
  for (std::size_t w = 0; w < kBitWords; ++w) {
    std::uint64_t word = b[w];
    while (word != 0) {
      m.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
      word &= word - 1;
    }
  }
  return VertexSet(std::move(m));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

VertexBits VertexSet::bits() const {
  VertexBits b{};
  for (Vertex v : members_) {
    if (v >= kMaxVertices) throw InputError("vertex label " + std::to_string(v) + " exceeds bit width");
    bits::set(b, v);
  }
  return b;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ',';
    os << members_[i];
  }
  os << '}';
  return os.str();
}

}  // namespace spreadlab
