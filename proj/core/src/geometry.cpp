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

#include "adinkra/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace adinkra::geometry {

namespace {

constexpr int kN = 5;

// kSigns[k-1][j-1]: sign applied to the conjugated x_k after crossing an
// edge of color j.
constexpr int kSigns[5][5] = {
    {+1, +1, +1, +1, +1},
    {-1, -1, -1, -1, +1},
    {-1, +1, +1, +1, -1},
    {-1, -1, +1, +1, -1},
    {-1, -1, -1, +1, -1},
};

struct FiberSlot {
  double modulus;  // 0 marks the vanishing coordinate
  bool imaginary;
};

// Face-center fibers by first color j = 1..5. The slot that is fixed to 1
// (x1, or x2 for the (4,5) pair) is listed with modulus 1 and real.
std::array<FiberSlot, 5> fiber(Color j) {
  const double phi = Constants::phi();
  const double s1 = std::sqrt(phi - 1.0);
  const double s2 = std::sqrt(phi);
  const double s3 = std::sqrt(phi + 1.0);
  switch (j) {
    case 1:
      return {{{1, false}, {1, true}, {0, false}, {s1, true}, {s2, true}}};
    case 2:
      return {{{1, false}, {s2, true}, {s1, false}, {0, false}, {1, true}}};
    case 3:
      return {{{1, false}, {s3, true}, {s2, false}, {1, false}, {0, false}}};
    case 4:
      return {{{0, false}, {1, false}, {1, true}, {1, true}, {1, true}}};
    case 5:
      return {{{1, false}, {0, false}, {1, true}, {s2, true}, {s3, true}}};
    default:
      throw std::out_of_range("fiber: color out of range");
  }
}

double sign_of(double v) { return v >= 0.0 ? 1.0 : -1.0; }

}  // namespace

double Constants::phi() { return std::numbers::phi; }

cplx Constants::zeta() { return std::polar(1.0, 2.0 * std::numbers::pi / 10.0); }

double Constants::r(Color k) {
  const double phi = Constants::phi();
  switch (k) {
    case 1:
    case 4:
      return phi + 1.0;
    case 2:
    case 5:
      return phi;
    case 3:
      return -phi;
    default:
      throw std::out_of_range("Constants::r: curve index out of range");
  }
}

CurvePoint CurvePoint::normalized() const {
  double largest = 0.0;
  int arg = 0;
  for (int i = 0; i < 5; ++i) {
    if (std::abs(x[i]) > largest) {
      largest = std::abs(x[i]);
      arg = i;
    }
  }
  if (largest == 0.0) throw std::domain_error("CurvePoint: all coordinates vanish");
  const cplx d = std::abs(x[0]) > 0.5 * largest ? x[0] : x[arg];
  CurvePoint out;
  for (int i = 0; i < 5; ++i) out.x[i] = x[i] / d;
  return out;
}

std::array<double, 3> curve_residual(const CurvePoint& p) {
  const CurvePoint q = p.normalized();
  const double phi = Constants::phi();
  const cplx s1 = q[1] * q[1];
  const cplx s2 = q[2] * q[2];
  return {std::abs(s1 + s2 + q[3] * q[3]), std::abs(phi * s1 + s2 + q[4] * q[4]),
          std::abs((phi + 1.0) * s1 + s2 + q[5] * q[5])};
}

CurvePoint base_point() {
  const cplx z = Constants::zeta();
  const double sp = std::sqrt(Constants::phi());
  const cplx i{0.0, 1.0};
  return CurvePoint{{1.0, std::pow(z, 2) * sp, std::pow(z, 9), i * std::pow(z, 6),
                     std::pow(z, 8) * sp}};
}

CurvePoint cross_edge(const CurvePoint& p, Color j) {
  if (j < 1 || j > kN) throw std::out_of_range("cross_edge: color out of range");
  CurvePoint out;
  for (int k = 0; k < kN; ++k) out.x[k] = double(kSigns[k][j - 1]) * std::conj(p.x[k]);
  return out;
}

CurvePoint walk(std::span<const Color> path) {
  CurvePoint p = base_point();
  for (Color j : path) p = cross_edge(p, j);
  return p;
}

CurvePoint embed_vertex(Vertex v) {
  if (v.bits >= 32) throw std::invalid_argument("embed_vertex: vertex outside H^5");
  std::vector<Color> path;
  for (Color j = 1; j <= kN; ++j) {
    if (!v.bit(j)) path.push_back(j);
  }
  return walk(path);
}

CurvePoint embed_face_center(const Face& f, Vertex adjacent) {
  if (!f.contains(adjacent, kN)) {
    throw std::invalid_argument("embed_face_center: vertex " + std::to_string(adjacent.bits) +
                                " is not on the face");
  }
  const auto slots = fiber(f.first);
  const int unit = f.first == 4 ? 1 : 0;
  const CurvePoint v = embed_vertex(adjacent);
  CurvePoint out;
  for (int k = 0; k < kN; ++k) {
    const FiberSlot s = slots[k];
    if (s.modulus == 0.0) {
      out.x[k] = 0.0;
    } else if (k == unit) {
      out.x[k] = 1.0;
    } else {
      const cplx ref = v.x[k] / v.x[unit];
      out.x[k] = s.imaginary ? cplx{0.0, s.modulus * sign_of(ref.imag())}
                             : cplx{s.modulus * sign_of(ref.real()), 0.0};
    }
  }
  return out;
}

double distance(const ECPoint& p, const ECPoint& q) {
  if (p.infinity || q.infinity) {
    return p.infinity == q.infinity ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::max(std::abs(p.x - q.x), std::abs(p.y - q.y));
}

std::string to_string(const ECPoint& p) {
  if (p.infinity) return "O";
  std::ostringstream os;
  os.precision(12);
  os << "(" << p.x.real() << (p.x.imag() < 0 ? "" : "+") << p.x.imag() << "i, " << p.y.real()
     << (p.y.imag() < 0 ? "" : "+") << p.y.imag() << "i)";
  return os.str();
}

EllipticCurve::EllipticCurve(Color k)
    : k_(k), r_(Constants::r(k)), a2_(-(1.0 + Constants::r(k))), a4_(Constants::r(k)) {}

double EllipticCurve::residual(const ECPoint& p) const {
  if (p.infinity) return 0.0;
  return std::abs(p.y * p.y - p.x * (p.x - 1.0) * (p.x - r_));
}

ECPoint EllipticCurve::add(const ECPoint& p, const ECPoint& q, Status* status) const {
  constexpr double kSame = 1e-9;
  constexpr double kPoor = 1e-6;
  if (p.infinity) return q;
  if (q.infinity) return p;
  cplx lambda;
  const double scale = 1.0 + std::abs(p.x);
  if (std::abs(p.x - q.x) < kSame * scale) {
    if (std::abs(p.y + q.y) < kSame * (1.0 + std::abs(p.y))) return ECPoint::at_infinity();
    const cplx den = 2.0 * p.y;
    if (status && std::abs(den) < kPoor) status->ill_conditioned = true;
    lambda = (3.0 * p.x * p.x + 2.0 * a2_ * p.x + a4_) / den;
  } else {
    const cplx den = q.x - p.x;
    if (status && std::abs(den) < kPoor) status->ill_conditioned = true;
    lambda = (q.y - p.y) / den;
  }
  const cplx x3 = lambda * lambda - a2_ - p.x - q.x;
  const cplx y3 = lambda * (p.x - x3) - p.y;
  return ECPoint::affine(x3, y3);
}

ECPoint EllipticCurve::neg(const ECPoint& p) const {
  if (p.infinity) return p;
  return ECPoint::affine(p.x, -p.y);
}

ECPoint EllipticCurve::mul(long m, const ECPoint& p, Status* status) const {
  ECPoint base = m < 0 ? neg(p) : p;
  unsigned long e = m < 0 ? 0ul - static_cast<unsigned long>(m) : static_cast<unsigned long>(m);
  ECPoint acc = ECPoint::at_infinity();
  while (e != 0) {
    if (e & 1ul) acc = add(acc, base, status);
    e >>= 1;
    if (e != 0) base = add(base, base, status);
  }
  return acc;
}

int EllipticCurve::torsion_order(const ECPoint& p, int limit, double tol) const {
  ECPoint acc = ECPoint::at_infinity();
  for (int m = 1; m <= limit; ++m) {
    acc = add(acc, p);
    if (acc.infinity) return m;
    // A finite multiple this large has numerically escaped to infinity.
    if (std::abs(acc.x) > 1.0 / tol) return m;
  }
  return 0;
}

double EllipticCurve::j_invariant() const {
  const double l = r_;
  const double num = l * l - l + 1.0;
  return 256.0 * num * num * num / (l * l * (l - 1.0) * (l - 1.0));
}

double j_invariant(Color k) { return EllipticCurve(k).j_invariant(); }

ECPoint nu(const CurvePoint& point, Color k) {
  const CurvePoint p = point.normalized();
  const double phi = Constants::phi();
  const cplx i{0.0, 1.0};
  const cplx x1 = p[1], x2 = p[2], x3 = p[3], x4 = p[4], x5 = p[5];
  const cplx den = [&] {
    switch (k) {
      case 1: return x5;
      case 2: return x1;
      case 3: return x2;
      case 4: return x3;
      case 5: return x4;
      default: throw std::out_of_range("nu: curve index out of range");
    }
  }();
  if (std::norm(den) < 1e-12) return ECPoint::at_infinity();
  const cplx d2 = den * den;
  const cplx d3 = d2 * den;
  switch (k) {
    case 1:
      return ECPoint::affine(-(2 * phi + 1) * x1 * x1 / d2 - phi, (2 * phi + 1) * x2 * x3 * x4 / d3);
    case 2:
      return ECPoint::affine(x2 * x2 / d2 + phi + 1.0, i * x3 * x4 * x5 / d3);
    case 3:
      return ECPoint::affine((2 * phi + 1) * x3 * x3 / d2 + phi + 1.0,
                             i * (2 * phi + 1) * x1 * x4 * x5 / d3);
    case 4:
      return ECPoint::affine((phi + 1.0) * x4 * x4 / d2 - phi, i * phi * x1 * x2 * x5 / d3);
    default:
      return ECPoint::affine(-x5 * x5 / d2 + phi + 1.0, i * x1 * x2 * x3 / d3);
  }
}

std::array<ECPoint, 3> generators(Color k) {
  const Hypercube cube(kN);
  const Face order4 = cube.face_of(kWhiteBase, wrap_color(k - 2, kN));
  const Face order2 = cube.face_of(kWhiteBase, k);
  return {nu(base_point(), k), nu(embed_face_center(order4, kWhiteBase), k),
          nu(embed_face_center(order2, kWhiteBase), k)};
}

ECPoint expand(const GroupElt& g, Color k) {
  const EllipticCurve e(k);
  const auto gen = generators(k);
  ECPoint out = e.mul(static_cast<long>(g.a), gen[0]);
  out = e.add(out, e.mul(g.b, gen[1]));
  return e.add(out, e.mul(g.c, gen[2]));
}

CurvePoint embed(const DivisorPoint& p) {
  return p.is_vertex() ? embed_vertex(p.vertex) : embed_face_center(p.face, p.face.base);
}

CrossValidation cross_validate(double tol) {
  const Hypercube cube(kN);
  std::vector<DivisorPoint> points;
  for (std::uint32_t v = 0; v < 32; ++v) points.push_back(DivisorPoint::at(Vertex{v}));
  for (const Face& f : cube.faces()) points.push_back(DivisorPoint::at(f));

  CrossValidation report;
  for (Color k = 1; k <= kCurveCount; ++k) {
    for (const DivisorPoint& p : points) {
      PointCheck c;
      c.k = k;
      c.point = p;
      c.combinatorial = point_image(p, k);
      c.numeric = nu(embed(p), k);
      c.expected = expand(c.combinatorial, k);
      c.error = distance(c.numeric, c.expected);
      c.ok = c.error < tol;
      report.worst_error = std::max(report.worst_error, c.error);
      report.passed += c.ok ? 1 : 0;
      report.checks.push_back(c);
    }
  }
  return report;
}

}  // namespace adinkra::geometry
