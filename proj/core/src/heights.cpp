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

#include "adinkra/heights.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace adinkra {

namespace {

std::size_t expected_size(int n) { return std::size_t{1} << n; }

HeightFn from_raw(int n, const std::vector<int>& raw) { return HeightFn(n, raw); }

}  // namespace

HeightFn::HeightFn(int n, std::span<const int> values) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("HeightFn: dimension out of range");
  if (values.size() != expected_size(n)) {
    throw std::invalid_argument("HeightFn: expected " + std::to_string(expected_size(n)) +
                                " values, got " + std::to_string(values.size()));
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*hi - *lo > 255) throw std::invalid_argument("HeightFn: spread exceeds 255");
  n_ = static_cast<std::uint8_t>(n);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values_[i] = static_cast<std::uint8_t>(values[i] - *lo);
  }
}

HeightFn HeightFn::fully_extended(int n) {
  std::vector<int> v(expected_size(n));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Vertex{static_cast<std::uint32_t>(i)}.weight();
  return HeightFn(n, v);
}

HeightFn HeightFn::valise(int n) {
  const Hypercube cube(n);
  std::vector<int> v(expected_size(n));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = cube.is_white(Vertex{static_cast<std::uint32_t>(i)}) ? 1 : 0;
  }
  return HeightFn(n, v);
}

int HeightFn::at(Vertex v) const {
  if (v.bits >= size()) throw std::out_of_range("HeightFn::at: vertex out of range");
  return values_[v.bits];
}

int HeightFn::max_height() const {
  const auto vals = values();
  return vals.empty() ? 0 : *std::max_element(vals.begin(), vals.end());
}

std::vector<int> HeightFn::to_vector() const {
  const auto vals = values();
  return {vals.begin(), vals.end()};
}

std::size_t HeightFn::hash() const {
  // FNV-1a over the live prefix.
  std::uint64_t h = 1469598103934665603ull ^ n_;
  for (std::uint8_t b : values()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Validation validate(int n, std::span<const int> values) {
  Validation out;
  if (n < 1 || n > kMaxDimension || values.size() != expected_size(n)) {
    out.ok = false;
    out.reason = "wrong number of values for dimension";
    return out;
  }
  for (std::uint32_t v = 0; v < values.size(); ++v) {
    for (Color j = 1; j <= n; ++j) {
      const std::uint32_t u = v ^ (1u << (j - 1));
      if (u < v) continue;
      const int d = values[v] - values[u];
      if (d != 1 && d != -1) {
        out.ok = false;
        out.witness = std::pair{Vertex{v}, Vertex{u}};
        out.reason = "edge of color " + std::to_string(j) + " has height difference " +
                     std::to_string(d < 0 ? -d : d);
        return out;
      }
    }
  }
  const auto lo = std::min_element(values.begin(), values.end());
  if (*lo != 0) {
    out.ok = false;
    const Vertex m{static_cast<std::uint32_t>(lo - values.begin())};
    out.witness = std::pair{m, m};
    out.reason = "minimum height is " + std::to_string(*lo) + ", expected 0";
  }
  return out;
}

Validation validate(const HeightFn& h) {
  const auto v = h.to_vector();
  return validate(h.dimension(), v);
}

bool is_local_max(const HeightFn& h, Vertex v) {
  for (Color j = 1; j <= h.dimension(); ++j) {
    if (h[v.flipped(j)] >= h[v]) return false;
  }
  return true;
}

bool is_local_min(const HeightFn& h, Vertex v) {
  for (Color j = 1; j <= h.dimension(); ++j) {
    if (h[v.flipped(j)] <= h[v]) return false;
  }
  return true;
}

std::vector<Vertex> lowering_targets(const HeightFn& h) {
  std::vector<Vertex> out;
  for (std::uint32_t v = 0; v < h.size(); ++v) {
    if (is_local_max(h, Vertex{v})) out.push_back(Vertex{v});
  }
  return out;
}

std::vector<Vertex> raising_targets(const HeightFn& h) {
  std::vector<Vertex> out;
  for (std::uint32_t v = 0; v < h.size(); ++v) {
    if (is_local_min(h, Vertex{v})) out.push_back(Vertex{v});
  }
  return out;
}

HeightFn lower(const HeightFn& h, Vertex v) {
  if (v.bits >= h.size() || !is_local_max(h, v)) {
    throw std::invalid_argument("lower: vertex " + std::to_string(v.bits) +
                                " is not a local maximum");
  }
  auto raw = h.to_vector();
  raw[v.bits] -= 2;
  return from_raw(h.dimension(), raw);
}

HeightFn raise(const HeightFn& h, Vertex v) {
  if (v.bits >= h.size() || !is_local_min(h, v)) {
    throw std::invalid_argument("raise: vertex " + std::to_string(v.bits) +
                                " is not a local minimum");
  }
  auto raw = h.to_vector();
  raw[v.bits] += 2;
  return from_raw(h.dimension(), raw);
}

HeightFn from_pins(int n, const PinSet& pins) {
  const Hypercube cube(n);
  if (pins.empty()) throw std::invalid_argument("from_pins: empty pin set");
  const int parity = (pins.front().height + pins.front().vertex.weight()) & 1;
  for (const Pin& p : pins) {
    if (!cube.contains(p.vertex)) throw std::invalid_argument("from_pins: pin outside cube");
    if (((p.height + p.vertex.weight()) & 1) != parity) {
      throw std::invalid_argument("from_pins: pins are parity-inconsistent");
    }
  }
  std::vector<int> raw(cube.vertex_count(), std::numeric_limits<int>::min());
  for (std::uint32_t v = 0; v < raw.size(); ++v) {
    for (const Pin& p : pins) {
      raw[v] = std::max(raw[v], p.height - cube.hamming(p.vertex, Vertex{v}));
    }
  }
  for (const Pin& p : pins) {
    if (raw[p.vertex.bits] != p.height) {
      throw std::invalid_argument("from_pins: pin at vertex " + std::to_string(p.vertex.bits) +
                                  " is pulled above its height by another pin");
    }
  }
  return from_raw(n, raw);
}

HeightFn invert(const HeightFn& h) {
  const int m = h.max_height();
  auto raw = h.to_vector();
  for (int& x : raw) x = m - x;
  return from_raw(h.dimension(), raw);
}

HeightFn shift(const HeightFn& h, Vertex u) {
  std::vector<int> raw(h.size());
  for (std::uint32_t v = 0; v < raw.size(); ++v) raw[v] = h[Vertex{v} ^ u];
  return from_raw(h.dimension(), raw);
}

Vertex rainbow_rotate_vertex(int n, Vertex u, Vertex v) {
  const std::uint32_t diff = (u ^ v).bits;
  const std::uint32_t mask = (1u << n) - 1;
  const std::uint32_t rotated = ((diff << 1) | (diff >> (n - 1))) & mask;
  return Vertex{u.bits ^ rotated};
}

HeightFn rainbow_rotate(const HeightFn& h, Vertex u) {
  std::vector<int> raw(h.size());
  for (std::uint32_t v = 0; v < raw.size(); ++v) {
    raw[v] = h[rainbow_rotate_vertex(h.dimension(), u, Vertex{v})];
  }
  return from_raw(h.dimension(), raw);
}

HeightFn act(const HeightFn& h, const SignedPermutation& g) {
  std::vector<int> raw(h.size());
  for (std::uint32_t v = 0; v < raw.size(); ++v) raw[v] = h[g.apply(Vertex{v})];
  return from_raw(h.dimension(), raw);
}

HeightCatalog::HeightCatalog(int n, std::vector<HeightFn> heights)
    : n_(n), heights_(std::move(heights)) {
  if (heights_.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw std::length_error("HeightCatalog: too many heights");
  }
  index_.reserve(heights_.size());
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    index_.emplace(heights_[i], static_cast<std::uint32_t>(i));
  }
}

std::optional<std::size_t> HeightCatalog::find(const HeightFn& h) const {
  const auto it = index_.find(h);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t HeightCatalog::index_of(const HeightFn& h) const {
  if (auto i = find(h)) return *i;
  throw std::out_of_range("HeightCatalog: height not present");
}

std::vector<Vertex> valise_schedule(int n) {
  HeightFn h = HeightFn::fully_extended(n);
  std::vector<int> quota(h.size());
  for (std::uint32_t v = 0; v < quota.size(); ++v) quota[v] = h[Vertex{v}] / 2;
  std::vector<Vertex> moves;
  for (;;) {
    bool moved = false;
    bool pending = false;
    for (std::uint32_t v = 0; v < quota.size(); ++v) {
      if (quota[v] == 0) continue;
      pending = true;
      if (is_local_max(h, Vertex{v})) {
        h = lower(h, Vertex{v});
        --quota[v];
        moves.push_back(Vertex{v});
        moved = true;
      }
    }
    if (!pending) break;
    if (!moved) throw std::logic_error("valise_schedule: stuck with pending lowerings");
  }
  return moves;
}

}  // namespace adinkra
