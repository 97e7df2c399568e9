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
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "adinkra/heights.hpp"
#include "adinkra/morse.hpp"

namespace adinkra {

/// The five elliptic factors are indexed by a color k = 1..5.
inline constexpr int kCurveCount = 5;

/// Base points of the color splittings: the all-ones vertex is white, the
/// all-zeros vertex is black.
inline constexpr Vertex kWhiteBase{0b11111};
inline constexpr Vertex kBlackBase{0b00000};

/// +1 or -1.
using SplitLabel = int;

/// (-1)^((u_k + u_{k+2}) + (base_k + base_{k+2})), indices mod n.
SplitLabel color_split(int n, Color k, Vertex base, Vertex u);
/// color_split for k = 1..n.
std::vector<SplitLabel> total_split(int n, Vertex base, Vertex u);

/// a*e_inf + b*e4 + c*e2 in Z x Z/4 x Z/2. Always stored reduced
/// (0 <= b < 4, 0 <= c < 2).
struct GroupElt {
  std::int64_t a = 0;
  int b = 0;
  int c = 0;

  GroupElt() = default;
  GroupElt(std::int64_t a_, int b_, int c_) : a(a_), b(((b_ % 4) + 4) % 4), c(((c_ % 2) + 2) % 2) {}

  bool is_identity() const { return a == 0 && b == 0 && c == 0; }
  /// True for a*(e_inf - e4): c = 0 and b = -a mod 4.
  bool on_main_line() const { return c == 0 && ((a + b) % 4 + 4) % 4 == 0; }

  friend bool operator==(const GroupElt&, const GroupElt&) = default;
  friend GroupElt operator+(const GroupElt& x, const GroupElt& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c};
  }
  friend GroupElt operator-(const GroupElt& x) { return {-x.a, -x.b, -x.c}; }
  friend GroupElt operator-(const GroupElt& x, const GroupElt& y) { return x + (-y); }
  friend GroupElt operator*(std::int64_t m, const GroupElt& x) {
    return {m * x.a, static_cast<int>((m % 4) * x.b), static_cast<int>((m % 2) * x.c)};
  }
  GroupElt& operator+=(const GroupElt& y) { return *this = *this + y; }
};

inline GroupElt group_add(const GroupElt& x, const GroupElt& y) { return x + y; }
inline GroupElt group_neg(const GroupElt& x) { return -x; }
inline GroupElt group_scale(std::int64_t m, const GroupElt& x) { return m * x; }

/// e_inf - e4, the unit step of the main line.
inline const GroupElt kUnitStep{1, 3, 0};

std::string to_string(const GroupElt& x);

/// One group element per elliptic factor.
struct JacobianImage {
  std::array<GroupElt, kCurveCount> curves{};

  GroupElt& operator[](Color k) { return curves[k - 1]; }
  const GroupElt& operator[](Color k) const { return curves[k - 1]; }
  bool is_identity() const;

  friend bool operator==(const JacobianImage&, const JacobianImage&) = default;
};

/// Image of a single point on E_k. Vertices use the splitting relative to
/// kWhiteBase or kBlackBase; face centers are classified by the offset of
/// their first color from k. Throws std::invalid_argument for n != 5.
GroupElt point_image(const DivisorPoint& p, Color k);

/// Sum of kappa * point_image over the divisor, per curve.
JacobianImage divisor_image(const MorseDivisor& d);
JacobianImage height_image(const HeightFn& h);

/// Images of every catalogued height, in catalog order.
std::vector<JacobianImage> catalog_images(const HeightCatalog& catalog, unsigned threads = 0);

struct CensusResult {
  /// histogram[k-1][a] = number of heights whose E_k coordinate has e_inf
  /// coefficient a.
  std::array<std::map<std::int64_t, std::uint64_t>, kCurveCount> histogram;
  std::uint64_t heights = 0;
  /// Coordinates not of the form a*(e_inf - e4).
  std::uint64_t off_line = 0;
  std::int64_t max_abs_a = 0;
};

CensusResult census(const std::vector<JacobianImage>& images);

/// Sign s with image(h2)[k] - image(h1)[k] = s * (e_inf - e4), or 0 if the
/// difference is anything else. Throws std::invalid_argument unless h2 is
/// obtained from h1 by lowering or raising one vertex.
int verify_step(const HeightFn& h1, const HeightFn& h2, Color k);

struct EquivarianceReport {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Checks the shift law nu_k(D_{sh_u h}) = eps * S_k(u) * nu_k(D_h), with
/// S_k(u) = color_split(5, k, 0, u) and eps = -1 for odd-weight u, and the
/// rotation laws for rainbow rotation from the white base b: with
/// rot(h) = h o rot_b (as rainbow_rotate computes it) the index advances,
/// nu_k(D_{rot h}) = nu_{k+1}(D_h); for the inverse rotation h o rot_b^{-1}
/// it moves back, nu_k = nu_{k-1}.
EquivarianceReport verify_equivariance(const HeightFn& h, Vertex u);

}  // namespace adinkra
