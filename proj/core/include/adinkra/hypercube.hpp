// Copyright 2026 The Adinkra Heights Authors
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

#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace adinkra {

/// Edge colors are 1-indexed, matching the coordinate x_j they flip.
using Color = int;

inline constexpr int kMaxDimension = 6;

/// Wraps an arbitrary integer onto the cyclic color range 1..n, so that
/// `wrap_color(k + 2, n)` reads like the rainbow arithmetic "k+2 mod n".
constexpr Color wrap_color(int j, int n) {
  int r = (j - 1) % n;
  if (r < 0) r += n;
  return r + 1;
}

/// A vertex of H^N stored as a bitmask; bit j-1 is the coordinate x_j.
struct Vertex {
  std::uint32_t bits = 0;

  constexpr bool bit(Color j) const { return ((bits >> (j - 1)) & 1u) != 0; }
  constexpr Vertex flipped(Color j) const { return Vertex{bits ^ (1u << (j - 1))}; }
  constexpr int weight() const { return std::popcount(bits); }

  friend constexpr bool operator==(Vertex, Vertex) = default;
  friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

constexpr Vertex operator^(Vertex u, Vertex v) { return Vertex{u.bits ^ v.bits}; }

/// A (j, j+1)-colored 4-cycle. `base` has x_j = x_{j+1} = 0.
struct Face {
  Color first = 1;
  Vertex base;

  Color second(int n) const { return wrap_color(first + 1, n); }
  /// The four cycle vertices in walk order base, +j, +j+1, +(j+1).
  std::array<Vertex, 4> members(int n) const;
  bool contains(Vertex v, int n) const;

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face&, const Face&) = default;
};

/// Coordinate permutation followed by an XOR translate. Realizes every
/// graph automorphism of H^N.
class SignedPermutation {
 public:
  static SignedPermutation identity(int n);
  SignedPermutation(std::vector<int> perm, std::uint32_t flips);

  /// Moves coordinate i (0-based) to position perm[i], then XORs `flips`.
  Vertex apply(Vertex v) const;
  /// (this * other)(v) == this->apply(other.apply(v)).
  SignedPermutation compose(const SignedPermutation& other) const;
  SignedPermutation inverse() const;

  int dimension() const { return n_; }
  const std::array<std::uint8_t, kMaxDimension>& perm() const { return perm_; }
  std::uint32_t flips() const { return flips_; }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  SignedPermutation() = default;
  std::array<std::uint8_t, kMaxDimension> perm_{};
  std::uint32_t flips_ = 0;
  int n_ = 0;
};

/// The hypercube H^N with canonical rainbow (1, 2, ..., N).
class Hypercube {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= kMaxDimension.
  explicit Hypercube(int n);

  int dimension() const { return n_; }
  std::size_t vertex_count() const { return std::size_t{1} << n_; }
  bool contains(Vertex v) const { return v.bits < vertex_count(); }

  Vertex neighbor(Vertex v, Color j) const;
  /// Entry j-1 is (j, v with bit j flipped).
  std::vector<std::pair<Color, Vertex>> neighbors(Vertex v) const;

  /// Hamming distance. Throws std::out_of_range if either vertex is not in H^N.
  int hamming(Vertex u, Vertex v) const;

  /// The top vertex of the fully extended height (all ones) is white; a
  /// vertex is white iff its weight has the parity of N.
  bool is_white(Vertex v) const { return ((v.weight() - n_) & 1) == 0; }

  /// First colors j of the rainbow-adjacent pairs (j, j+1). For n = 2 the
  /// pairs (1,2) and (2,1) coincide and only j = 1 is returned.
  std::vector<Color> face_pairs() const;
  /// All faces, grouped by pair then ordered by base. Throws for n < 2.
  std::vector<Face> faces() const;
  /// The unique (j, j+1) face containing v.
  Face face_of(Vertex v, Color j) const;
  /// Dense index of `f` within faces().
  std::size_t face_index(const Face& f) const;
  std::size_t face_count() const;

  /// All 2^n * n! automorphisms, each exactly once.
  std::vector<SignedPermutation> automorphisms() const;
  /// A generating set: an adjacent transposition, the n-cycle, and one flip.
  std::vector<SignedPermutation> automorphism_generators() const;

 private:
  int n_;
};

}  // namespace adinkra
