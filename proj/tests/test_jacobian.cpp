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

#include <gtest/gtest.h>

#include <random>

#include "adinkra/jacobian.hpp"
#include "oracles.hpp"

using namespace adinkra;

namespace {

const HeightCatalog& catalog5() {
  static const HeightCatalog cat = enumerate_heights(5);
  return cat;
}

const std::vector<JacobianImage>& images5() {
  static const std::vector<JacobianImage> imgs = catalog_images(catalog5());
  return imgs;
}

const HeightFn kFe = HeightFn::fully_extended(5);
const HeightFn kH1 = lower(kFe, Vertex{31});
const HeightFn kH2 = lower(kH1, Vertex{0b11110});

// Image computed straight from raw values with the point tables written out
// again: critical vertices from neighbor sign changes, bow ties from value
// counts, and the per-offset face images.
JacobianImage oracle_image(const std::vector<int>& h) {
  using oracle::bit;
  auto wrap = [](int j) { return (j - 1 + 50) % 5 + 1; };
  auto split = [&](int k, int base, int u) {
    const int e = bit(u, k) + bit(u, wrap(k + 2)) + bit(base, k) + bit(base, wrap(k + 2));
    return e % 2 == 0 ? 1 : -1;
  };
  JacobianImage img;
  for (int k = 1; k <= 5; ++k) {
    std::int64_t a = 0;
    int b = 0, c = 0;
    for (int v = 0; v < 32; ++v) {
      const int lambda = oracle::sign_changes(h, 5, v);
      const int kappa = lambda == 0 ? -1 : (lambda - 2) / 2;
      if (kappa == 0) continue;
      if (std::popcount(static_cast<unsigned>(v)) % 2 == 1) {
        a += kappa * split(k, 31, v);
      } else {
        a -= kappa * split(k, 0, v);
        b += 2 * kappa;
      }
    }
    for (int j = 1; j <= 5; ++j) {
      const int j2 = wrap(j + 1);
      for (int v = 0; v < 32; ++v) {
        if (bit(v, j) || bit(v, j2)) continue;
        const int q[4] = {v, v | 1 << (j - 1), v | 1 << (j - 1) | 1 << (j2 - 1), v | 1 << (j2 - 1)};
        std::set<int> vals;
        for (int x : q) vals.insert(h[x]);
        if (vals.size() != 2) continue;
        switch (((j - k) % 5 + 5) % 5) {
          case 3: b += split(k, 31, v); break;
          case 4: b += 2; break;
          case 0: c += 1; break;
          case 1: b += 2; c += 1; break;
          default: break;
        }
      }
    }
    img[k] = GroupElt(a, b, c);
  }
  return img;
}

}  // namespace

TEST(Splitting, Examples) {
  const Vertex w{0b10101};
  EXPECT_EQ(color_split(5, 1, kWhiteBase, w), 1);
  EXPECT_EQ(color_split(5, 4, kWhiteBase, w), -1);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(color_split(5, k, Vertex{19}, Vertex{19}), 1);
  EXPECT_EQ(total_split(5, kWhiteBase, kWhiteBase), (std::vector<SplitLabel>{1, 1, 1, 1, 1}));
  EXPECT_EQ(total_split(5, kWhiteBase, kWhiteBase.flipped(1)), (std::vector<SplitLabel>{-1, 1, 1, -1, 1}));
  EXPECT_EQ(total_split(5, kWhiteBase, kWhiteBase.flipped(1).flipped(2)),
            (std::vector<SplitLabel>{-1, -1, 1, -1, -1}));
}

TEST(Splitting, HalfEachSign) {
  for (int k = 1; k <= 5; ++k) {
    for (std::uint32_t base = 0; base < 32; ++base) {
      int plus = 0;
      for (std::uint32_t u = 0; u < 32; ++u) plus += color_split(5, k, Vertex{base}, Vertex{u}) > 0;
      EXPECT_EQ(plus, 16);
    }
  }
}

TEST(Group, Arithmetic) {
  EXPECT_EQ(GroupElt(1, 3, 0) + GroupElt(1, 3, 0), GroupElt(2, 2, 0));
  EXPECT_EQ(-GroupElt(1, 3, 0), GroupElt(-1, 1, 0));
  EXPECT_TRUE((4 * GroupElt(0, 1, 0)).is_identity());
  EXPECT_TRUE((2 * GroupElt(0, 0, 1)).is_identity());
  EXPECT_EQ(GroupElt(0, -1, 3), GroupElt(0, 3, 1));
  EXPECT_TRUE(kUnitStep.on_main_line());
  EXPECT_FALSE(GroupElt(1, 1, 0).on_main_line());
  EXPECT_EQ(group_scale(-3, kUnitStep), GroupElt(-3, 3, 0));
}

TEST(PointImage, Examples) {
  EXPECT_EQ(point_image(DivisorPoint::at(Vertex{0b10101}), 4), GroupElt(-1, 0, 0));
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(point_image(DivisorPoint::at(kBlackBase), k), GroupElt(-1, 2, 0));
    EXPECT_EQ(point_image(DivisorPoint::at(kWhiteBase), k), GroupElt(1, 0, 0));
  }
  const Hypercube cube(5);
  EXPECT_EQ(point_image(DivisorPoint::at(cube.face_of(Vertex{0b11110}, 2)), 4), GroupElt(0, 3, 0));
  for (const Face& f : cube.faces()) {
    if (f.first == 3) EXPECT_TRUE(point_image(DivisorPoint::at(f), 1).is_identity());
  }
  EXPECT_EQ(point_image(DivisorPoint::at(cube.face_of(kWhiteBase, 1)), 3), GroupElt(0, 1, 0));
}

TEST(PointImage, FaceSignConstantOnFace) {
  const Hypercube cube(5);
  for (int k = 1; k <= 5; ++k) {
    for (const Face& f : cube.faces()) {
      if (f.first != wrap_color(k - 2, 5)) continue;
      const auto m = f.members(5);
      for (Vertex v : m) EXPECT_EQ(color_split(5, k, kWhiteBase, v), color_split(5, k, kWhiteBase, m[0]));
    }
  }
}

TEST(PointImage, RequiresFiveCube) {
  const MorseDivisor d(4, {{DivisorPoint::at(Vertex{0}), -1}});
  EXPECT_THROW(divisor_image(d), std::invalid_argument);
}

// Summing over all 8 order-4 face centers, or over all 32 vertices, cancels.
TEST(PointImage, Cancellations) {
  const Hypercube cube(5);
  for (int k = 1; k <= 5; ++k) {
    GroupElt faces, verts;
    for (const Face& f : cube.faces()) {
      if (f.first == wrap_color(k - 2, 5)) faces += point_image(DivisorPoint::at(f), k);
    }
    for (std::uint32_t v = 0; v < 32; ++v) verts += point_image(DivisorPoint::at(Vertex{v}), k);
    EXPECT_TRUE(faces.is_identity()) << k;
    EXPECT_TRUE(verts.is_identity()) << k;
  }
}

TEST(DivisorImage, WorkedExamples) {
  EXPECT_TRUE(height_image(HeightFn::valise(5)).is_identity());
  EXPECT_TRUE(height_image(kFe).is_identity());
  const JacobianImage i1 = height_image(kH1);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(i1[k], GroupElt(1, 3, 0));
  const JacobianImage i2 = height_image(kH2);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(i2[k], GroupElt(2, 2, 0));
  EXPECT_TRUE(i2[5].is_identity());
}

TEST(DivisorImage, AgreesWithOracleOnAllHeights) {
  const auto& cat = catalog5();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    ASSERT_EQ(images5()[i], oracle_image(cat[i].to_vector())) << i;
  }
}

TEST(DivisorImage, ExtremalPins) {
  // Two tops two steps apart; every other vertex hangs below them.
  const HeightFn h = from_pins(5, {{Vertex{0b00101}, 2}, {Vertex{0b01111}, 2}});
  const JacobianImage img = height_image(h);
  std::vector<int> nonzero;
  for (int k = 1; k <= 5; ++k) {
    if (img[k].is_identity()) continue;
    nonzero.push_back(k);
    EXPECT_EQ(std::abs(img[k].a), 8);
    EXPECT_TRUE(img[k].on_main_line());
  }
  ASSERT_EQ(nonzero.size(), 2u);
  // The two nonzero slots are not rainbow neighbors.
  const int gap = nonzero[1] - nonzero[0];
  EXPECT_TRUE(gap == 2 || gap == 3);
}

TEST(Census, TableValues) {
  const CensusResult r = census(images5());
  EXPECT_EQ(r.heights, 395094u);
  EXPECT_EQ(r.off_line, 0u);
  EXPECT_EQ(r.max_abs_a, 8);
  const std::vector<std::uint64_t> half{24, 128, 704, 2752, 9048, 23392, 47200, 72384};
  std::map<std::int64_t, std::uint64_t> expected{{0, 83830}};
  for (int i = 0; i < 8; ++i) {
    expected[-8 + i] = half[i];
    expected[8 - i] = half[i];
  }
  std::uint64_t sum = 0;
  for (const auto& [a, f] : expected) sum += f;
  EXPECT_EQ(sum, 395094u);
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(r.histogram[k - 1], expected) << k;
}

TEST(Step, Examples) {
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(verify_step(kFe, kH1, k), 1);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(verify_step(kH1, kH2, k), 1);
  EXPECT_EQ(verify_step(kH1, kH2, 5), -1);
  EXPECT_EQ(verify_step(kH2, kH1, 5), 1);
  EXPECT_THROW(verify_step(kFe, kH2, 1), std::invalid_argument);
}

// Exhaustive over Gamma_5: every lowering moves each coordinate by a unit.
TEST(Step, EveryEdge) {
  const auto& cat = catalog5();
  std::size_t edges = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (Vertex v : lowering_targets(cat[i])) {
      const auto j = cat.index_of(lower(cat[i], v));
      for (int k = 1; k <= 5; ++k) {
        const GroupElt d = images5()[j][k] - images5()[i][k];
        ASSERT_TRUE(d == kUnitStep || d == -kUnitStep);
      }
      ++edges;
    }
  }
  EXPECT_GT(edges, cat.size());
}

TEST(Equivariance, IdentityShift) {
  EXPECT_TRUE(verify_equivariance(kH1, Vertex{0}).ok);
}

TEST(Equivariance, OddShiftNegatesOneLowered) {
  const Vertex u{0b00001};
  const JacobianImage a = height_image(kH1);
  const JacobianImage b = height_image(shift(kH1, u));
  for (int k = 1; k <= 5; ++k) {
    EXPECT_EQ(b[k], (-color_split(5, k, kBlackBase, u)) * a[k]);
  }
}

TEST(Equivariance, RotationPermutesCoordinates) {
  // h2 is not rotation symmetric, so this sees the direction.
  const JacobianImage a = height_image(kH2);
  const JacobianImage b = height_image(rainbow_rotate(kH2, kWhiteBase));
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(b[k], a[wrap_color(k + 1, 5)]);
}

TEST(Equivariance, SampledShifts) {
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<std::size_t> pick(0, catalog5().size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const HeightFn& h = catalog5()[pick(rng)];
    for (std::uint32_t u = 0; u < 32; ++u) {
      const auto r = verify_equivariance(h, Vertex{u});
      ASSERT_TRUE(r.ok) << (r.failures.empty() ? "" : r.failures.front());
    }
  }
}
