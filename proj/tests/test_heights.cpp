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
#include <set>

#include "adinkra/heights.hpp"
#include "oracles.hpp"

using namespace adinkra;

namespace {

std::vector<int> weights(int n) {
  std::vector<int> v(1u << n);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::popcount(i);
  return v;
}

const HeightCatalog& catalog(int n) {
  static std::map<int, HeightCatalog> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_heights(n)).first;
  return it->second;
}

}  // namespace

TEST(Validate, BasicShapes) {
  EXPECT_TRUE(validate(HeightFn::valise(5)));
  EXPECT_TRUE(validate(HeightFn::fully_extended(5)));
  EXPECT_TRUE(validate(5, weights(5)));

  const std::vector<int> zeros(32, 0);
  const Validation v = validate(5, zeros);
  EXPECT_FALSE(v);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(std::popcount(v.witness->first.bits ^ v.witness->second.bits), 1);

  // Edge condition holds but the minimum is 1.
  std::vector<int> shifted = weights(3);
  for (int& x : shifted) ++x;
  EXPECT_FALSE(validate(3, shifted));
}

TEST(Validate, ValiseColors) {
  const HeightFn v = HeightFn::valise(5);
  const Hypercube h(5);
  for (std::uint32_t u = 0; u < 32; ++u) EXPECT_EQ(v[Vertex{u}], h.is_white(Vertex{u}) ? 1 : 0);
  EXPECT_EQ(HeightFn::fully_extended(5), HeightFn(5, weights(5)));
}

TEST(Enumerate, CountsPerDimension) {
  const std::vector<std::size_t> expected{2, 6, 38, 990, 395094};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(catalog(n).size(), expected[n - 1]) << n;
}

TEST(Enumerate, MatchesDepthFirstOracle) {
  for (int n = 1; n <= 5; ++n) {
    const auto ref = oracle::dfs_heights(n);
    std::vector<std::vector<int>> got;
    for (const HeightFn& h : catalog(n)) got.push_back(h.to_vector());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, ref) << "n = " << n;
  }
}

TEST(Enumerate, EveryHeightValidatesAndIsUnique) {
  const auto& cat = catalog(5);
  std::set<HeightFn> seen;
  for (const HeightFn& h : cat) {
    ASSERT_TRUE(validate(h));
    seen.insert(h);
  }
  EXPECT_EQ(seen.size(), cat.size());
}

TEST(Enumerate, ThreadCountDoesNotChangeResult) {
  EnumerateOptions one;
  one.threads = 1;
  EnumerateOptions many;
  many.threads = 7;
  EXPECT_EQ(enumerate_heights(4, one).heights(), enumerate_heights(4, many).heights());
}

TEST(Enumerate, RefusesLargeDimension) {
  EXPECT_THROW(enumerate_heights(6), std::length_error);
  EXPECT_THROW(enumerate_heights(0), std::invalid_argument);
}

TEST(Enumerate, CountWithoutMaterializing) {
  const std::vector<std::uint64_t> expected{2, 6, 38, 990, 395094};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(count_heights(n), expected[n - 1]) << n;
}

TEST(ThreeColorings, IndependentCounts) {
  const std::vector<std::uint64_t> expected{6, 18, 114, 2970, 1185282};
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(count_three_colorings(n), expected[n - 1]) << n;
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(count_three_colorings(n), 3 * catalog(n).size());
}

TEST(ThreeColorings, BruteForceOracles) {
  EXPECT_EQ(oracle::exhaustive_three_colorings(3), 114u);
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(oracle::dfs_three_colorings(n), count_three_colorings(n)) << n;
  }
}

TEST(Moves, TargetsOfNamedHeights) {
  const HeightFn fe = HeightFn::fully_extended(5);
  EXPECT_EQ(lowering_targets(fe), std::vector<Vertex>{Vertex{31}});
  EXPECT_EQ(raising_targets(fe), std::vector<Vertex>{Vertex{0}});

  const HeightFn v = HeightFn::valise(5);
  const Hypercube h(5);
  const auto tops = lowering_targets(v);
  EXPECT_EQ(tops.size(), 16u);
  for (Vertex u : tops) EXPECT_TRUE(h.is_white(u));

  const HeightFn h1 = lower(fe, Vertex{31});
  std::vector<Vertex> expected;
  for (std::uint32_t u = 0; u < 32; ++u) {
    if (std::popcount(u) == 4) expected.push_back(Vertex{u});
  }
  EXPECT_EQ(lowering_targets(h1), expected);
}

TEST(Moves, LowerAndRaise) {
  const HeightFn fe = HeightFn::fully_extended(5);
  const HeightFn h1 = lower(fe, Vertex{31});
  for (std::uint32_t u = 0; u < 32; ++u) {
    EXPECT_EQ(h1[Vertex{u}], u == 31 ? 3 : std::popcount(u));
  }
  const HeightFn h2 = lower(h1, Vertex{0b11110});
  EXPECT_EQ(h2[Vertex{0b11110}], 2);
  EXPECT_EQ(raise(h2, Vertex{0b11110}), h1);
  EXPECT_THROW(lower(fe, Vertex{0}), std::invalid_argument);
  EXPECT_THROW(raise(fe, Vertex{31}), std::invalid_argument);
}

TEST(Moves, LoweringValiseGivesInvertedValise) {
  // Lowering every white top of the valise turns it upside down.
  HeightFn h = HeightFn::valise(3);
  for (Vertex v : lowering_targets(HeightFn::valise(3))) h = lower(h, v);
  EXPECT_EQ(h, invert(HeightFn::valise(3)));
}

// Gamma_N is closed: every lowering of a catalogued height is catalogued.
TEST(Moves, CatalogClosedUnderMoves) {
  for (int n = 1; n <= 5; ++n) {
    const auto& cat = catalog(n);
    for (const HeightFn& h : cat) {
      for (Vertex v : lowering_targets(h)) ASSERT_TRUE(cat.find(lower(h, v)));
      for (Vertex v : raising_targets(h)) ASSERT_TRUE(cat.find(raise(h, v)));
    }
  }
}

TEST(Pins, NamedConfigurations) {
  PinSet whites;
  const Hypercube h(5);
  for (std::uint32_t v = 0; v < 32; ++v) {
    if (h.is_white(Vertex{v})) whites.push_back({Vertex{v}, 1});
  }
  EXPECT_EQ(from_pins(5, whites), HeightFn::valise(5));
  EXPECT_EQ(from_pins(5, {{Vertex{31}, 5}}), HeightFn::fully_extended(5));
}

TEST(Pins, EachPinAttainsItsHeight) {
  // Two pins at equal height two steps apart.
  const PinSet pins{{Vertex{0b00101}, 4}, {Vertex{0b01111}, 4}};
  const HeightFn h = from_pins(5, pins);
  EXPECT_TRUE(validate(h));
  EXPECT_EQ(h[Vertex{0b00101}], h.max_height());
  EXPECT_EQ(h[Vertex{0b01111}], h.max_height());
  EXPECT_EQ(lowering_targets(h).size(), 2u);
}

TEST(Pins, Rejections) {
  EXPECT_THROW(from_pins(5, {}), std::invalid_argument);
  // Parity: adjacent vertices pinned at equal height.
  EXPECT_THROW(from_pins(5, {{Vertex{0}, 2}, {Vertex{1}, 2}}), std::invalid_argument);
  // Consistent parity but the lower pin is swallowed by the upper one.
  EXPECT_THROW(from_pins(5, {{Vertex{0}, 5}, {Vertex{1}, 0}}), std::invalid_argument);
}

TEST(Symmetries, InvertShiftRotateBasics) {
  const HeightFn v = HeightFn::valise(5);
  const HeightFn iv = invert(v);
  const Hypercube h(5);
  for (std::uint32_t u = 0; u < 32; ++u) EXPECT_EQ(iv[Vertex{u}], h.is_white(Vertex{u}) ? 0 : 1);

  const HeightFn fe = HeightFn::fully_extended(5);
  EXPECT_EQ(shift(fe, Vertex{0}), fe);
  EXPECT_EQ(rainbow_rotate_vertex(5, Vertex{13}, Vertex{13}), Vertex{13});
}

// Property: every symmetry operation preserves validity; invert is an
// involution and rotation has order n.
TEST(Symmetries, PropertiesOverCatalog) {
  for (int n = 1; n <= 4; ++n) {
    const auto& cat = catalog(n);
    const std::uint32_t size = 1u << n;
    for (const HeightFn& h : cat) {
      EXPECT_EQ(invert(invert(h)), h);
      for (std::uint32_t u = 0; u < size; ++u) {
        const HeightFn s = shift(h, Vertex{u});
        ASSERT_TRUE(validate(s));
        ASSERT_TRUE(cat.find(s));
        HeightFn r = h;
        for (int i = 0; i < n; ++i) {
          r = rainbow_rotate(r, Vertex{u});
          ASSERT_TRUE(validate(r));
        }
        EXPECT_EQ(r, h);
      }
    }
  }
}

TEST(Symmetries, RotationIsABijectionFixingBase) {
  for (std::uint32_t u = 0; u < 32; ++u) {
    std::set<std::uint32_t> image;
    for (std::uint32_t v = 0; v < 32; ++v) {
      const Vertex w = rainbow_rotate_vertex(5, Vertex{u}, Vertex{v});
      image.insert(w.bits);
      // Colors advance: a color-j edge goes to a color-(j+1) edge.
      for (int j = 1; j <= 5; ++j) {
        const Vertex x = rainbow_rotate_vertex(5, Vertex{u}, Vertex{v}.flipped(j));
        EXPECT_EQ(w ^ x, Vertex{1u << (wrap_color(j + 1, 5) - 1)});
      }
    }
    EXPECT_EQ(image.size(), 32u);
    EXPECT_EQ(rainbow_rotate_vertex(5, Vertex{u}, Vertex{u}), Vertex{u});
  }
}

TEST(Schedule, ReachesValiseByLocalMaxima) {
  for (int n = 2; n <= 5; ++n) {
    HeightFn h = HeightFn::fully_extended(n);
    const auto steps = valise_schedule(n);
    for (Vertex v : steps) {
      ASSERT_TRUE(is_local_max(h, v));
      h = lower(h, v);
    }
    // Odd-weight vertices end on top: the valise for odd n, its inverse
    // for even n.
    EXPECT_EQ(h, n % 2 ? HeightFn::valise(n) : invert(HeightFn::valise(n)));
    // Sum over vertices of floor(weight / 2).
    std::size_t expected = 0;
    for (std::uint32_t v = 0; v < (1u << n); ++v) expected += std::popcount(v) / 2;
    EXPECT_EQ(steps.size(), expected);
    EXPECT_EQ(steps.size(), static_cast<std::size_t>((n - 1) << (n - 2)));
  }
}
