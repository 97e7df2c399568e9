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
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "adinkra/hypercube.hpp"

namespace adinkra {

/// A height function on H^N, normalized to minimum 0.
///
/// Values are stored inline (2^N <= 64 bytes) so heights are cheap value
/// types that can be hashed, sorted and kept by the hundred thousand. The
/// constructor accepts arbitrary integers and translates them so that the
/// minimum is 0; it does not check the edge condition (see validate()).
class HeightFn {
 public:
  HeightFn() = default;
  /// Throws std::invalid_argument if values.size() != 2^n or the spread
  /// exceeds 255.
  HeightFn(int n, std::span<const int> values);

  static HeightFn fully_extended(int n);
  /// Whites at 1, blacks at 0.
  static HeightFn valise(int n);

  int dimension() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }
  int operator[](Vertex v) const { return values_[v.bits]; }
  int at(Vertex v) const;
  int max_height() const;
  std::span<const std::uint8_t> values() const { return {values_.data(), size()}; }
  std::vector<int> to_vector() const;

  friend bool operator==(const HeightFn& a, const HeightFn& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }
  friend bool operator<(const HeightFn& a, const HeightFn& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.values_ < b.values_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, 64> values_{};
  std::uint8_t n_ = 0;
};

struct HeightHash {
  std::size_t operator()(const HeightFn& h) const { return h.hash(); }
};

/// Result of validate(). On failure `witness` is an offending edge (or the
/// minimum vertex when the function is not normalized).
struct Validation {
  bool ok = true;
  std::optional<std::pair<Vertex, Vertex>> witness;
  std::string reason;
  explicit operator bool() const { return ok; }
};

Validation validate(int n, std::span<const int> values);
Validation validate(const HeightFn& h);

std::vector<Vertex> lowering_targets(const HeightFn& h);
std::vector<Vertex> raising_targets(const HeightFn& h);
bool is_local_max(const HeightFn& h, Vertex v);
bool is_local_min(const HeightFn& h, Vertex v);

/// h'(v) = h(v) - 2, renormalized. Throws std::invalid_argument unless v is
/// a strict local maximum.
HeightFn lower(const HeightFn& h, Vertex v);
/// h'(v) = h(v) + 2, renormalized. Throws unless v is a strict local minimum.
HeightFn raise(const HeightFn& h, Vertex v);

struct Pin {
  Vertex vertex;
  int height = 0;
};
using PinSet = std::vector<Pin>;

/// Hanging-garden construction: h(v) = max over pins (h_p - d(p, v)),
/// renormalized. Throws std::invalid_argument on an empty or
/// parity-inconsistent pin set, or if a pin would not attain its height.
HeightFn from_pins(int n, const PinSet& pins);

/// v -> max(h) - h(v).
HeightFn invert(const HeightFn& h);
/// v -> h(u XOR v).
HeightFn shift(const HeightFn& h, Vertex u);
/// Vertex map behind rainbow_rotate: the colors on a path from u to v are
/// advanced by one step of the rainbow cycle (1 2 ... N).
Vertex rainbow_rotate_vertex(int n, Vertex u, Vertex v);
/// v -> h(rot_u(v)).
HeightFn rainbow_rotate(const HeightFn& h, Vertex u);
/// v -> h(g(v)).
HeightFn act(const HeightFn& h, const SignedPermutation& g);

/// Every height on H^n, sorted, with an index for membership queries.
class HeightCatalog {
 public:
  HeightCatalog(int n, std::vector<HeightFn> heights);

  int dimension() const { return n_; }
  std::size_t size() const { return heights_.size(); }
  const HeightFn& operator[](std::size_t i) const { return heights_[i]; }
  const std::vector<HeightFn>& heights() const { return heights_; }
  std::optional<std::size_t> find(const HeightFn& h) const;
  /// Like find() but throws std::out_of_range if h is not catalogued.
  std::size_t index_of(const HeightFn& h) const;

  auto begin() const { return heights_.begin(); }
  auto end() const { return heights_.end(); }

 private:
  int n_;
  std::vector<HeightFn> heights_;
  std::unordered_map<HeightFn, std::uint32_t, HeightHash> index_;
};

struct EnumerateOptions {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Optional progress sink, called with (done, total) work units.
  std::function<void(std::size_t, std::size_t)> progress;
};

/// Inductive gluing enumeration: each height on H^n restricts to a pair of
/// heights on the two copies of H^{n-1} whose relative offset makes every
/// vertical edge differ by exactly 1. Materializes for 1 <= n <= 5 and
/// throws std::length_error for larger n.
HeightCatalog enumerate_heights(int n, const EnumerateOptions& options = {});

/// Height count without materializing H^n. Each height on H^n is a pair
/// (bottom height b on H^{n-1}, top g with |g - b| = 1 pointwise); the tops
/// for a fixed b correspond to the up-closed subsets of the order that b
/// induces on H^{n-1}, which are counted by memoized splitting.
std::uint64_t count_heights(int n, const EnumerateOptions& options = {});

/// Proper 3-colorings of H^n, counted independently of heights by a
/// transfer over H^{n-1} x {0,1}: pairs of colorings of the two halves that
/// differ at every vertex. Supported for n <= 5.
std::uint64_t count_three_colorings(int n);

/// Lowering schedule from the fully extended height to the valise: every
/// vertex is lowered floor(h(v) / 2) times, always at a current local max.
std::vector<Vertex> valise_schedule(int n);

}  // namespace adinkra
