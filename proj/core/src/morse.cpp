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

#include "adinkra/morse.hpp"

#include <algorithm>
#include <stdexcept>

namespace adinkra {

FaceKind classify_face(const HeightFn& h, const Face& f) {
  const auto members = f.members(h.dimension());
  int lo = h[members[0]];
  int hi = lo;
  for (Vertex v : members) {
    lo = std::min(lo, h[v]);
    hi = std::max(hi, h[v]);
  }
  // Heights alternate parity around the 4-cycle, so the spread is 1 or 2.
  return hi - lo == 1 ? FaceKind::BowTie : FaceKind::Diamond;
}

std::vector<ClassifiedFace> classify_faces(const HeightFn& h) {
  const Hypercube cube(h.dimension());
  std::vector<ClassifiedFace> out;
  for (const Face& f : cube.faces()) out.push_back({f, classify_face(h, f)});
  return out;
}

MorseDivisor::MorseDivisor(int n, std::vector<DivisorTerm> terms) : n_(n) {
  std::sort(terms.begin(), terms.end(),
            [](const DivisorTerm& a, const DivisorTerm& b) { return a.point < b.point; });
  for (const DivisorTerm& t : terms) {
    if (!terms_.empty() && terms_.back().point == t.point) {
      terms_.back().kappa += t.kappa;
    } else {
      terms_.push_back(t);
    }
  }
  std::erase_if(terms_, [](const DivisorTerm& t) { return t.kappa == 0; });
}

int MorseDivisor::coefficient(const DivisorPoint& p) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), p,
                             [](const DivisorTerm& t, const DivisorPoint& q) { return t.point < q; });
  return (it != terms_.end() && it->point == p) ? it->kappa : 0;
}

int MorseDivisor::degree() const {
  int sum = 0;
  for (const DivisorTerm& t : terms_) sum += t.kappa;
  return sum;
}

int sign_changes(const HeightFn& h, Vertex v) {
  const int n = h.dimension();
  int changes = 0;
  for (Color j = 1; j <= n; ++j) {
    const bool up = h[v.flipped(j)] > h[v];
    const bool next_up = h[v.flipped(wrap_color(j + 1, n))] > h[v];
    changes += up != next_up ? 1 : 0;
  }
  return changes;
}

int vertex_kappa(const HeightFn& h, Vertex v) {
  const int lambda = sign_changes(h, v);
  if (lambda == 0) return -1;
  return (lambda - 2) / 2;
}

MorseDivisor morse_divisor(const HeightFn& h) {
  std::vector<DivisorTerm> terms;
  for (std::uint32_t v = 0; v < h.size(); ++v) {
    const int k = vertex_kappa(h, Vertex{v});
    if (k != 0) terms.push_back({DivisorPoint::at(Vertex{v}), k});
  }
  if (h.dimension() >= 2) {
    for (const auto& cf : classify_faces(h)) {
      if (cf.kind == FaceKind::BowTie) terms.push_back({DivisorPoint::at(cf.face), 1});
    }
  }
  return MorseDivisor(h.dimension(), std::move(terms));
}

}  // namespace adinkra
