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

#include <compare>
#include <vector>

#include "adinkra/heights.hpp"

namespace adinkra {

/// A rainbow face of the mesh over a height: a diamond if its four heights
/// take three values, a bow tie if they take two.
enum class FaceKind { Diamond, BowTie };

struct ClassifiedFace {
  Face face;
  FaceKind kind;
};

/// Faces in Hypercube::faces() order. Requires n >= 2.
std::vector<ClassifiedFace> classify_faces(const HeightFn& h);
FaceKind classify_face(const HeightFn& h, const Face& f);

/// A point that can carry a divisor coefficient: a hypercube vertex or the
/// center of a rainbow face. Vertices sort before face centers.
struct DivisorPoint {
  enum class Kind : std::uint8_t { Vertex, FaceCenter };

  Kind kind = Kind::Vertex;
  Vertex vertex;  // meaningful for Kind::Vertex
  Face face;      // meaningful for Kind::FaceCenter

  static DivisorPoint at(Vertex v) { return {Kind::Vertex, v, Face{}}; }
  static DivisorPoint at(Face f) { return {Kind::FaceCenter, Vertex{}, f}; }
  bool is_vertex() const { return kind == Kind::Vertex; }

  friend bool operator==(const DivisorPoint&, const DivisorPoint&) = default;
  friend auto operator<=>(const DivisorPoint&, const DivisorPoint&) = default;
};

struct DivisorTerm {
  DivisorPoint point;
  int kappa = 0;

  friend bool operator==(const DivisorTerm&, const DivisorTerm&) = default;
};

/// Sparse formal sum of points with nonzero integer coefficients, kept
/// sorted by point.
class MorseDivisor {
 public:
  MorseDivisor() = default;
  /// Merges repeated points and drops zero coefficients.
  MorseDivisor(int n, std::vector<DivisorTerm> terms);

  int dimension() const { return n_; }
  const std::vector<DivisorTerm>& terms() const { return terms_; }
  int coefficient(const DivisorPoint& p) const;
  int degree() const;

  friend bool operator==(const MorseDivisor&, const MorseDivisor&) = default;

 private:
  int n_ = 0;
  std::vector<DivisorTerm> terms_;
};

/// Cyclic sign changes of d_j = h(v + e_j) - h(v) taken in rainbow order.
int sign_changes(const HeightFn& h, Vertex v);

/// -1 at a local extremum (no sign change), 0 at a regular vertex (two),
/// and mu at a saddle with 2 + 2 mu sign changes.
int vertex_kappa(const HeightFn& h, Vertex v);

/// Vertex coefficients from vertex_kappa plus +1 at each bow-tie face center.
MorseDivisor morse_divisor(const HeightFn& h);

inline int degree(const MorseDivisor& d) { return d.degree(); }

}  // namespace adinkra
