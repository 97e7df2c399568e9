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

#include "adinkra/jacobian.hpp"

#include <stdexcept>

#include "parallel.hpp"

namespace adinkra {

namespace {

void require_five(int n, const char* where) {
  if (n != 5) throw std::invalid_argument(std::string(where) + ": defined for n = 5 only");
}

int parity_bits(Vertex v, Color k, int n) {
  return (v.bit(k) ? 1 : 0) + (v.bit(wrap_color(k + 2, n)) ? 1 : 0);
}

}  // namespace

SplitLabel color_split(int n, Color k, Vertex base, Vertex u) {
  if (n < 3) throw std::invalid_argument("color_split: need n >= 3");
  if (k < 1 || k > n) throw std::out_of_range("color_split: color out of range");
  return ((parity_bits(u, k, n) + parity_bits(base, k, n)) & 1) == 0 ? 1 : -1;
}

std::vector<SplitLabel> total_split(int n, Vertex base, Vertex u) {
  std::vector<SplitLabel> out;
  for (Color k = 1; k <= n; ++k) out.push_back(color_split(n, k, base, u));
  return out;
}

std::string to_string(const GroupElt& x) {
  return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + "," + std::to_string(x.c) + ")";
}

bool JacobianImage::is_identity() const {
  for (const auto& g : curves) {
    if (!g.is_identity()) return false;
  }
  return true;
}

GroupElt point_image(const DivisorPoint& p, Color k) {
  constexpr int n = 5;
  if (k < 1 || k > n) throw std::out_of_range("point_image: curve index out of range");
  if (p.is_vertex()) {
    const Vertex v = p.vertex;
    if (v.bits >= 32) throw std::invalid_argument("point_image: vertex outside H^5");
    if (v.weight() % 2 == 1) {
      return {color_split(n, k, kWhiteBase, v), 0, 0};
    }
    return {-color_split(n, k, kBlackBase, v), 2, 0};
  }
  const Face& f = p.face;
  switch (wrap_color(f.first - k + 1, n) - 1) {
    case 3: {
      // Colors k-2, k-1 avoid k and k+2, so the splitting is constant on
      // the face; the base vertex stands in for all four.
      return {0, color_split(n, k, kWhiteBase, f.base), 0};
    }
    case 4:
      return {0, 2, 0};
    case 0:
      return {0, 0, 1};
    case 1:
      return {0, 2, 1};
    default:
      return {};
  }
}

JacobianImage divisor_image(const MorseDivisor& d) {
  require_five(d.dimension(), "divisor_image");
  JacobianImage out;
  for (const DivisorTerm& t : d.terms()) {
    for (Color k = 1; k <= kCurveCount; ++k) out[k] += t.kappa * point_image(t.point, k);
  }
  return out;
}

JacobianImage height_image(const HeightFn& h) { return divisor_image(morse_divisor(h)); }

std::vector<JacobianImage> catalog_images(const HeightCatalog& catalog, unsigned threads) {
  require_five(catalog.dimension(), "catalog_images");
  std::vector<JacobianImage> out(catalog.size());
  const unsigned t = detail::resolve_threads(threads);
  detail::for_chunks(catalog.size(), std::size_t{t} * 8, t,
                     [&](std::size_t, std::size_t lo, std::size_t hi) {
                       for (std::size_t i = lo; i < hi; ++i) out[i] = height_image(catalog[i]);
                     });
  return out;
}

CensusResult census(const std::vector<JacobianImage>& images) {
  CensusResult r;
  r.heights = images.size();
  for (const JacobianImage& img : images) {
    for (Color k = 1; k <= kCurveCount; ++k) {
      const GroupElt& g = img[k];
      ++r.histogram[k - 1][g.a];
      if (!g.on_main_line()) ++r.off_line;
      r.max_abs_a = std::max(r.max_abs_a, g.a < 0 ? -g.a : g.a);
    }
  }
  return r;
}

int verify_step(const HeightFn& h1, const HeightFn& h2, Color k) {
  bool adjacent = false;
  for (Vertex v : lowering_targets(h1)) adjacent = adjacent || lower(h1, v) == h2;
  for (Vertex v : raising_targets(h1)) adjacent = adjacent || raise(h1, v) == h2;
  if (!adjacent) throw std::invalid_argument("verify_step: heights are not one move apart");
  const GroupElt diff = height_image(h2)[k] - height_image(h1)[k];
  if (diff == kUnitStep) return 1;
  if (diff == -kUnitStep) return -1;
  return 0;
}

EquivarianceReport verify_equivariance(const HeightFn& h, Vertex u) {
  require_five(h.dimension(), "verify_equivariance");
  EquivarianceReport report;
  const JacobianImage base = height_image(h);

  const JacobianImage shifted = height_image(shift(h, u));
  const int eps = u.weight() % 2 == 0 ? 1 : -1;
  for (Color k = 1; k <= kCurveCount; ++k) {
    const int sign = eps * color_split(5, k, kBlackBase, u);
    const GroupElt expected = sign * base[k];
    if (shifted[k] != expected) {
      report.ok = false;
      report.failures.push_back("shift by " + std::to_string(u.bits) + ", k=" + std::to_string(k) +
                                ": got " + to_string(shifted[k]) + ", expected " +
                                to_string(expected));
    }
  }

  // rainbow_rotate pulls h back along rot_b, which advances the curve index;
  // pushing h forward (the inverse rotation, rot_b^4) moves it back.
  const HeightFn pulled = rainbow_rotate(h, kWhiteBase);
  HeightFn pushed = pulled;
  for (int i = 0; i < 3; ++i) pushed = rainbow_rotate(pushed, kWhiteBase);
  const JacobianImage forward = height_image(pulled);
  const JacobianImage backward = height_image(pushed);
  for (Color k = 1; k <= kCurveCount; ++k) {
    const GroupElt& next = base[wrap_color(k + 1, kCurveCount)];
    const GroupElt& prev = base[wrap_color(k - 1, kCurveCount)];
    if (forward[k] != next) {
      report.ok = false;
      report.failures.push_back("rotation, k=" + std::to_string(k) + ": got " +
                                to_string(forward[k]) + ", expected nu_" +
                                std::to_string(wrap_color(k + 1, kCurveCount)) + " = " +
                                to_string(next));
    }
    if (backward[k] != prev) {
      report.ok = false;
      report.failures.push_back("inverse rotation, k=" + std::to_string(k) + ": got " +
                                to_string(backward[k]) + ", expected nu_" +
                                std::to_string(wrap_color(k - 1, kCurveCount)) + " = " +
                                to_string(prev));
    }
  }
  return report;
}

}  // namespace adinkra
