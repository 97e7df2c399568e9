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

#include "adinkra/hypercube.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace adinkra {

std::array<Vertex, 4> Face::members(int n) const {
  const Color j = first;
  const Color k = second(n);
  return {base, base.flipped(j), base.flipped(j).flipped(k), base.flipped(k)};
}

bool Face::contains(Vertex v, int n) const {
  const Color k = second(n);
  const std::uint32_t mask = (1u << (first - 1)) | (1u << (k - 1));
  return (v.bits & ~mask) == base.bits;
}

SignedPermutation SignedPermutation::identity(int n) {
  SignedPermutation p;
  p.n_ = n;
  for (int i = 0; i < n; ++i) p.perm_[i] = static_cast<std::uint8_t>(i);
  return p;
}

SignedPermutation::SignedPermutation(std::vector<int> perm, std::uint32_t flips) {
  const int n = static_cast<int>(perm.size());
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("SignedPermutation: dimension out of range");
  }
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) {
    if (sorted[i] != i) throw std::invalid_argument("SignedPermutation: not a permutation");
  }
  if (flips >= (1u << n)) throw std::invalid_argument("SignedPermutation: flip mask too wide");
  n_ = n;
  flips_ = flips;
  for (int i = 0; i < n; ++i) perm_[i] = static_cast<std::uint8_t>(perm[i]);
}

Vertex SignedPermutation::apply(Vertex v) const {
  std::uint32_t out = 0;
  for (int i = 0; i < n_; ++i) {
    out |= ((v.bits >> i) & 1u) << perm_[i];
  }
  return Vertex{out ^ flips_};
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  // this(other(v)) = P1(P2 v ^ f2) ^ f1 = (P1 P2) v ^ (P1 f2 ^ f1).
  SignedPermutation r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.perm_[i] = perm_[other.perm_[i]];
  SignedPermutation linear = *this;
  linear.flips_ = 0;
  r.flips_ = linear.apply(Vertex{other.flips_}).bits ^ flips_;
  return r;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r;
  r.n_ = n_;
  for (int i = 0; i < n_; ++i) r.perm_[perm_[i]] = static_cast<std::uint8_t>(i);
  SignedPermutation linear = r;
  r.flips_ = linear.apply(Vertex{flips_}).bits;
  return r;
}

Hypercube::Hypercube(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension) {
    throw std::invalid_argument("Hypercube: dimension must be in [1, " +
                                std::to_string(kMaxDimension) + "], got " + std::to_string(n));
  }
}

Vertex Hypercube::neighbor(Vertex v, Color j) const {
  if (j < 1 || j > n_) throw std::out_of_range("Hypercube::neighbor: color out of range");
  return v.flipped(j);
}

std::vector<std::pair<Color, Vertex>> Hypercube::neighbors(Vertex v) const {
  std::vector<std::pair<Color, Vertex>> out;
  out.reserve(n_);
  for (Color j = 1; j <= n_; ++j) out.emplace_back(j, v.flipped(j));
  return out;
}

int Hypercube::hamming(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) {
    throw std::out_of_range("Hypercube::hamming: vertex outside H^" + std::to_string(n_));
  }
  return (u ^ v).weight();
}

std::vector<Color> Hypercube::face_pairs() const {
  if (n_ < 2) return {};
  if (n_ == 2) return {1};
  std::vector<Color> out(n_);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

std::size_t Hypercube::face_count() const {
  return face_pairs().size() * (n_ >= 2 ? (std::size_t{1} << (n_ - 2)) : 0);
}

std::vector<Face> Hypercube::faces() const {
  if (n_ < 2) throw std::invalid_argument("Hypercube::faces: need n >= 2");
  std::vector<Face> out;
  out.reserve(face_count());
  for (Color j : face_pairs()) {
    const Color k = wrap_color(j + 1, n_);
    const std::uint32_t mask = (1u << (j - 1)) | (1u << (k - 1));
    for (std::uint32_t b = 0; b < vertex_count(); ++b) {
      if ((b & mask) == 0) out.push_back(Face{j, Vertex{b}});
    }
  }
  return out;
}

Face Hypercube::face_of(Vertex v, Color j) const {
  if (n_ == 2) j = 1;
  const Color k = wrap_color(j + 1, n_);
  const std::uint32_t mask = (1u << (j - 1)) | (1u << (k - 1));
  return Face{j, Vertex{v.bits & ~mask}};
}

std::size_t Hypercube::face_index(const Face& f) const {
  // Within a pair, faces are ordered by base; compress the two zero bits out.
  const Color k = f.second(n_);
  const int lo = std::min(f.first, k) - 1;
  const int hi = std::max(f.first, k) - 1;
  std::uint32_t b = f.base.bits;
  const std::uint32_t below_lo = b & ((1u << lo) - 1);
  const std::uint32_t mid = (b >> (lo + 1)) & ((1u << (hi - lo - 1)) - 1);
  const std::uint32_t above = b >> (hi + 1);
  const std::uint32_t compact = below_lo | (mid << lo) | (above << (hi - 1));
  const std::size_t per_pair = std::size_t{1} << (n_ - 2);
  return static_cast<std::size_t>(f.first - 1) * per_pair + compact;
}

std::vector<SignedPermutation> Hypercube::automorphisms() const {
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SignedPermutation> out;
  out.reserve(vertex_count() * static_cast<std::size_t>(std::tgamma(n_ + 1) + 0.5));
  do {
    for (std::uint32_t f = 0; f < vertex_count(); ++f) out.emplace_back(perm, f);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<SignedPermutation> Hypercube::automorphism_generators() const {
  std::vector<SignedPermutation> gens;
  std::vector<int> perm(n_);
  std::iota(perm.begin(), perm.end(), 0);
  if (n_ >= 2) {
    std::vector<int> swap01 = perm;
    std::swap(swap01[0], swap01[1]);
    gens.emplace_back(swap01, 0u);
    std::vector<int> cycle(n_);
    for (int i = 0; i < n_; ++i) cycle[i] = (i + 1) % n_;
    gens.emplace_back(cycle, 0u);
  }
  gens.emplace_back(perm, 1u);
  return gens;
}

}  // namespace adinkra
