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

#ifndef SPREADLAB_VERTEX_SET_HPP
#define SPREADLAB_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace spreadlab {

using Vertex = std::uint32_t;

// Fixed-width bit vector used for every set computation. Four words keep the
// type trivially copyable and cover every generator at desk scale
// (K_12 graph-edge labels need 66 bits).
inline constexpr std::size_t kBitWords = 4;
inline constexpr std::size_t kMaxVertices = 64 * kBitWords;
using VertexBits = std::array<std::uint64_t, kBitWords>;

namespace bits {

inline void set(VertexBits& b, Vertex v) { b[v >> 6] |= std::uint64_t{1} << (v & 63); }

inline bool test(const VertexBits& b, Vertex v) { return (b[v >> 6] >> (v & 63)) & 1U; }

inline unsigned count(const VertexBits& b) {
  unsigned c = 0;
  for (auto w : b) c += static_cast<unsigned>(std::popcount(w));
  return c;
}

inline unsigned intersection_count(const VertexBits& a, const VertexBits& b) {
  unsigned c = 0;
  for (std::size_t i = 0; i < kBitWords; ++i) c += static_cast<unsigned>(std::popcount(a[i] & b[i]));
  return c;
}

// |a \ b|
inline unsigned difference_count(const VertexBits& a, const VertexBits& b) {
  unsigned c = 0;
  for (std::size_t i = 0; i < kBitWords; ++i) c += static_cast<unsigned>(std::popcount(a[i] & ~b[i]));
  return c;
}

inline bool is_subset(const VertexBits& a, const VertexBits& b) {
  std::uint64_t miss = 0;
  for (std::size_t i = 0; i < kBitWords; ++i) miss |= a[i] & ~b[i];
  return miss == 0;
}

inline VertexBits unite(const VertexBits& a, const VertexBits& b) {
  VertexBits r{};
  for (std::size_t i = 0; i < kBitWords; ++i) r[i] = a[i] | b[i];
  return r;
}

inline VertexBits intersect(const VertexBits& a, const VertexBits& b) {
  VertexBits r{};
  for (std::size_t i = 0; i < kBitWords; ++i) r[i] = a[i] & b[i];
  return r;
}

inline VertexBits difference(const VertexBits& a, const VertexBits& b) {
  VertexBits r{};
  for (std::size_t i = 0; i < kBitWords; ++i) r[i] = a[i] & ~b[i];
  return r;
}

// Lexicographic order of the sorted label lists, without materializing them.
inline bool lex_less(const VertexBits& a, const VertexBits& b) {
  std::size_t w = 0;
  while (w < kBitWords && a[w] == b[w]) ++w;
  if (w == kBitWords) return false;
  const std::uint64_t d = a[w] ^ b[w];
  const std::uint64_t low = d & (~d + 1);
  // Elements strictly above the first difference.
  const std::uint64_t above_mask = ~((low << 1) - 1);
  const bool a_has = (a[w] & low) != 0;
  const VertexBits& other = a_has ? b : a;
  bool other_has_more = (other[w] & above_mask) != 0;
  for (std::size_t i = w + 1; i < kBitWords && !other_has_more; ++i) other_has_more = other[i] != 0;
  // The side holding the first difference is smaller unless the other side
  // ends there (then the other side is a proper prefix).
  return a_has ? other_has_more : !other_has_more;
}

struct Hash {
  std::size_t operator()(const VertexBits& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : b) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace bits

// A set of vertex labels kept sorted and duplicate-free. Ordering is
// lexicographic on the sorted label list, which is also the witness order used
// throughout certification.
class VertexSet {
 public:
  VertexSet() = default;

  // Throws InputError unless `labels` is strictly increasing.
  static VertexSet from_sorted(std::vector<Vertex> labels);
  static VertexSet from_unsorted(std::vector<Vertex> labels);
  static VertexSet from_bits(const VertexBits& b);

  std::span<const Vertex> members() const { return members_; }
  const std::vector<Vertex>& vector() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }

  bool contains(Vertex v) const;
  bool is_subset_of(const VertexSet& other) const;

  // Requires every label < kMaxVertices.
  VertexBits bits() const;

  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  explicit VertexSet(std::vector<Vertex> m) : members_(std::move(m)) {}
  std::vector<Vertex> members_;
};

}  // namespace spreadlab

#endif  // SPREADLAB_VERTEX_SET_HPP
