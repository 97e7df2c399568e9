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
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "adinkra/jacobian.hpp"
#include "adinkra/morse.hpp"

namespace adinkra::geometry {

using cplx = std::complex<double>;

/// Closed-form constants of the genus-5 curve and its elliptic factors.
struct Constants {
  static double phi();   // golden ratio
  static cplx zeta();    // exp(2 pi i / 10)
  static double alpha3() { return phi(); }
  static double alpha4() { return phi() + 1.0; }
  /// E_k: y^2 = x (x - 1) (x - r_k).
  static double r(Color k);
};

/// A point of CP^4, [x1 : ... : x5].
struct CurvePoint {
  std::array<cplx, 5> x{};

  /// Divides by x1 when |x1| > max|x_i| / 2, otherwise by the largest
  /// coordinate.
  CurvePoint normalized() const;
  cplx& operator[](int i) { return x[i - 1]; }
  const cplx& operator[](int i) const { return x[i - 1]; }
};

/// Moduli of the three defining quadrics at the normalized point:
/// x1^2 + x2^2 + x3^2, phi x1^2 + x2^2 + x4^2, (phi + 1) x1^2 + x2^2 + x5^2.
std::array<double, 3> curve_residual(const CurvePoint& p);

/// Image of the all-ones vertex.
CurvePoint base_point();
/// Crossing an edge of color j conjugates every coordinate and flips the
/// signs listed for j in the adjacency table.
CurvePoint cross_edge(const CurvePoint& p, Color j);
/// Walks from the all-ones vertex along `path` (a list of colors).
CurvePoint walk(std::span<const Color> path);
/// The embedding of a vertex of H^5, via the path that clears its zero bits
/// in increasing color order.
CurvePoint embed_vertex(Vertex v);
/// The center of face f, with each free sign chosen to agree with the
/// corresponding coordinate of `adjacent`'s embedding. Throws
/// std::invalid_argument unless adjacent lies on f.
CurvePoint embed_face_center(const Face& f, Vertex adjacent);

struct ECPoint {
  bool infinity = true;
  cplx x{}, y{};

  static ECPoint at_infinity() { return {}; }
  static ECPoint affine(cplx x, cplx y) { return {false, x, y}; }
};

/// Absolute distance between points: infinite if exactly one is Infinity.
double distance(const ECPoint& p, const ECPoint& q);
std::string to_string(const ECPoint& p);

/// Chord-tangent law on y^2 = x (x - 1) (x - r_k) over C.
class EllipticCurve {
 public:
  explicit EllipticCurve(Color k);

  Color index() const { return k_; }
  double r() const { return r_; }
  /// |y^2 - x (x - 1) (x - r)|, zero at Infinity.
  double residual(const ECPoint& p) const;

  struct Status {
    /// Set when a tangent or chord slope had a denominator below the
    /// conditioning threshold without being treated as the identity.
    bool ill_conditioned = false;
  };

  ECPoint add(const ECPoint& p, const ECPoint& q, Status* status = nullptr) const;
  ECPoint neg(const ECPoint& p) const;
  /// Double-and-add; negative m multiplies the negation.
  ECPoint mul(long m, const ECPoint& p, Status* status = nullptr) const;
  /// Smallest 1 <= m <= limit with m p = Infinity, or 0.
  int torsion_order(const ECPoint& p, int limit, double tol = 1e-7) const;
  /// Legendre-form j-invariant 256 (l^2 - l + 1)^3 / (l^2 (l - 1)^2).
  double j_invariant() const;

 private:
  Color k_;
  double r_;
  double a2_;
  double a4_;
};

double j_invariant(Color k);

/// The rational map from the curve to E_k. Returns Infinity when the
/// denominator coordinate vanishes (squared modulus below 1e-12 after
/// normalization).
ECPoint nu(const CurvePoint& p, Color k);

/// Numeric generators of E_k: e_inf, e4, e2 in that order.
std::array<ECPoint, 3> generators(Color k);
/// a e_inf + b e4 + c e2 on E_k.
ECPoint expand(const GroupElt& g, Color k);

/// The embedded point of a divisor point (face centers use the face base).
CurvePoint embed(const DivisorPoint& p);

struct PointCheck {
  Color k = 1;
  DivisorPoint point;
  GroupElt combinatorial;
  ECPoint numeric;
  ECPoint expected;
  double error = 0.0;
  bool ok = false;
};

struct CrossValidation {
  std::vector<PointCheck> checks;
  std::size_t passed = 0;
  double worst_error = 0.0;
  bool ok() const { return passed == checks.size(); }
};

/// Compares nu(p, k) with the group-law expansion of point_image(p, k) for
/// all 32 vertices and 40 face centers on all five curves.
CrossValidation cross_validate(double tol = 1e-9);

}  // namespace adinkra::geometry
