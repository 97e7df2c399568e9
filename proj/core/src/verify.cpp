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

#include "adinkra/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "adinkra/digraph.hpp"
#include "adinkra/geometry.hpp"
#include "adinkra/morse.hpp"
#include "parallel.hpp"

namespace adinkra {

namespace {

constexpr std::uint64_t kHeightCounts[] = {2, 6, 38, 990, 395094};

// E_1 frequencies for a = 0, +-1, ..., +-8.
constexpr std::uint64_t kCensusTable[] = {83830, 72384, 47200, 23392, 9048, 2752, 704, 128, 24};

Check make(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

SuiteReport counts_suite(VerifyContext& ctx) {
  SuiteReport r{"counts", {}, 0.0};
  EnumerateOptions opts;
  opts.threads = ctx.threads();
  for (int n = 1; n <= 5; ++n) {
    const std::uint64_t got =
        n == 5 ? ctx.catalog5().size() : enumerate_heights(n, opts).size();
    r.checks.push_back(make("heights n=" + str(n), got == kHeightCounts[n - 1],
                            "enumerated " + str(got) + ", expected " + str(kHeightCounts[n - 1])));
    const std::uint64_t counted = count_heights(n, opts);
    r.checks.push_back(make("up-set count n=" + str(n), counted == got,
                            "counted " + str(counted) + ", enumerated " + str(got)));
    const std::uint64_t colorings = count_three_colorings(n);
    r.checks.push_back(make("3-colorings n=" + str(n), colorings == 3 * got,
                            str(colorings) + " colorings, 3 x heights = " + str(3 * got)));
  }
  return r;
}

SuiteReport morse_suite(VerifyContext& ctx) {
  SuiteReport r{"morse", {}, 0.0};
  const HeightCatalog& cat = ctx.catalog5();
  std::uint64_t bad_degree = 0, bad_lambda = 0, bad_bowtie = 0, bad_invert = 0;
  for (const HeightFn& h : cat) {
    const MorseDivisor d = morse_divisor(h);
    if (d.degree() != 8) ++bad_degree;
    for (std::uint32_t v = 0; v < 32; ++v) {
      const int l = sign_changes(h, Vertex{v});
      if (l % 2 != 0 || l > 4) ++bad_lambda;
    }
    int bowties = 0;
    for (const auto& cf : classify_faces(h)) bowties += cf.kind == FaceKind::BowTie ? 1 : 0;
    int face_terms = 0;
    for (const auto& t : d.terms()) face_terms += t.point.is_vertex() ? 0 : 1;
    if (bowties != face_terms) ++bad_bowtie;
    if (morse_divisor(invert(h)) != d) ++bad_invert;
  }
  const std::string of = " of " + str(cat.size()) + " heights";
  r.checks.push_back(make("degree 8", bad_degree == 0, str(bad_degree) + " violations" + of));
  r.checks.push_back(make("sign changes even and <= 4", bad_lambda == 0,
                          str(bad_lambda) + " violating vertices"));
  r.checks.push_back(make("bow ties = face terms", bad_bowtie == 0, str(bad_bowtie) + " violations"));
  r.checks.push_back(make("inversion keeps divisor", bad_invert == 0, str(bad_invert) + " violations"));
  return r;
}

SuiteReport steps_suite(VerifyContext& ctx) {
  SuiteReport r{"steps", {}, 0.0};
  const HeightCatalog& cat = ctx.catalog5();
  const auto& images = ctx.images5();
  std::uint64_t edges = 0, bad = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    for (Vertex v : lowering_targets(cat[i])) {
      const std::size_t j = cat.index_of(lower(cat[i], v));
      ++edges;
      for (Color k = 1; k <= kCurveCount; ++k) {
        const GroupElt d = images[j][k] - images[i][k];
        if (d != kUnitStep && d != -kUnitStep) ++bad;
      }
    }
  }
  r.checks.push_back(make("unit steps on every edge", bad == 0 && edges > 0,
                          str(edges) + " edges, " + str(bad) + " coordinate violations"));
  return r;
}

SuiteReport theorem_suite(VerifyContext& ctx) {
  SuiteReport r{"theorem", {}, 0.0};
  const CensusResult c = census(ctx.images5());
  r.checks.push_back(make("all coordinates a(e_inf - e4)", c.off_line == 0,
                          str(c.off_line) + " coordinates off the line"));
  r.checks.push_back(make("|a| <= 8", c.max_abs_a <= 8, "max |a| = " + str(c.max_abs_a)));
  const auto& e1 = c.histogram[0];
  const auto freq = [&](std::int64_t a) {
    const auto it = e1.find(a);
    return it == e1.end() ? std::uint64_t{0} : it->second;
  };
  r.checks.push_back(make("a = +-8 attained by 24 heights each", freq(8) == 24 && freq(-8) == 24,
                          "a=8: " + str(freq(8)) + ", a=-8: " + str(freq(-8))));
  bool table = e1.size() == 17;
  for (int a = 0; a <= 8; ++a) table = table && freq(a) == kCensusTable[a] && freq(-a) == kCensusTable[a];
  r.checks.push_back(make("E_1 histogram matches frequency table", table,
                          str(e1.size()) + " bins"));
  bool same = true;
  for (int k = 2; k <= kCurveCount; ++k) same = same && c.histogram[k - 1] == e1;
  r.checks.push_back(make("histograms identical for k = 1..5", same, ""));
  return r;
}

SuiteReport geometry_suite(VerifyContext&) {
  using namespace geometry;
  SuiteReport r{"geometry", {}, 0.0};
  const Hypercube cube(5);

  double worst = 0.0;
  for (std::uint32_t v = 0; v < 32; ++v) {
    for (double x : curve_residual(embed_vertex(Vertex{v}))) worst = std::max(worst, x);
  }
  for (const Face& f : cube.faces()) {
    for (Vertex m : f.members(5)) {
      for (double x : curve_residual(embed_face_center(f, m))) worst = std::max(worst, x);
    }
  }
  r.checks.push_back(make("curve residuals < 1e-9", worst < 1e-9, "worst " + str(worst)));

  // The center must not depend on which face vertex fixes the signs.
  double spread = 0.0;
  for (const Face& f : cube.faces()) {
    const CurvePoint ref = embed_face_center(f, f.base);
    for (Vertex m : f.members(5)) {
      const CurvePoint p = embed_face_center(f, m);
      for (int i = 0; i < 5; ++i) spread = std::max(spread, std::abs(p.x[i] - ref.x[i]));
    }
  }
  r.checks.push_back(make("face centers independent of adjacent vertex", spread < 1e-12,
                          "max spread " + str(spread)));

  // Random walks, including backtracking, end where the direct path does.
  std::mt19937 rng(12345);
  double path_err = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Color> path;
    std::uint32_t at = 31;
    const int len = 1 + static_cast<int>(rng() % 12);
    for (int s = 0; s < len; ++s) {
      const Color j = 1 + static_cast<Color>(rng() % 5);
      path.push_back(j);
      at ^= 1u << (j - 1);
    }
    const CurvePoint a = walk(path);
    const CurvePoint b = embed_vertex(Vertex{at});
    for (int i = 0; i < 5; ++i) path_err = std::max(path_err, std::abs(a.x[i] - b.x[i]));
  }
  r.checks.push_back(make("embedding path independent", path_err < 1e-12, "max error " + str(path_err)));

  bool jok = true;
  std::string jdetail;
  for (Color k = 1; k <= 5; ++k) {
    const double j = j_invariant(k);
    jok = jok && std::abs(j - 2048.0) < 1e-6;
    jdetail += (k > 1 ? ", " : "") + str(j);
  }
  r.checks.push_back(make("j-invariant 2048", jok, jdetail));

  double bw = 0.0;
  int torsion_bad = 0;
  int small_torsion = 0;
  for (Color k = 1; k <= 5; ++k) {
    const EllipticCurve e(k);
    const ECPoint w = nu(base_point(), k);
    const ECPoint b = nu(embed_vertex(kBlackBase), k);
    const ECPoint f = nu(embed_face_center(cube.face_of(kWhiteBase, wrap_color(k - 1, 5)), kWhiteBase), k);
    bw = std::max(bw, distance(e.add(b, w), f));
    // Orders by offset of the face's first color from k: 0, 1, 2, 3, 4.
    constexpr int expected[] = {2, 2, 1, 4, 2};
    for (const Face& face : cube.faces()) {
      const int delta = wrap_color(face.first - k + 1, 5) - 1;
      const int order = e.torsion_order(nu(embed_face_center(face, face.base), k), 8);
      if (order != expected[delta]) ++torsion_bad;
    }
    const auto gens = generators(k);
    for (std::uint32_t v = 0; v < 32; ++v) {
      const ECPoint twice = e.mul(2, nu(embed_vertex(Vertex{v}), k));
      for (int bb = 0; bb < 4; ++bb) {
        for (int cc = 0; cc < 2; ++cc) {
          const ECPoint t = e.add(e.mul(bb, gens[1]), e.mul(cc, gens[2]));
          if (distance(twice, t) < 1e-6) ++small_torsion;
        }
      }
      if (e.torsion_order(nu(embed_vertex(Vertex{v}), k), 12) != 0) ++small_torsion;
    }
  }
  r.checks.push_back(make("B+ + W+ = F(k-1,k)", bw < 1e-9, "max error " + str(bw)));
  r.checks.push_back(make("face-center torsion orders", torsion_bad == 0,
                          str(torsion_bad) + " of 200 face images off pattern"));
  r.checks.push_back(make("vertex images not small torsion", small_torsion == 0,
                          str(small_torsion) + " coincidences"));

  const CrossValidation cv = cross_validate(1e-9);
  r.checks.push_back(make("cross validation", cv.ok(),
                          str(cv.passed) + "/" + str(cv.checks.size()) + ", worst " +
                              str(cv.worst_error)));
  return r;
}

SuiteReport equivariance_suite(VerifyContext& ctx) {
  SuiteReport r{"equivariance", {}, 0.0};
  const HeightCatalog& cat = ctx.catalog5();
  const auto& images = ctx.images5();

  std::uint64_t rot_bad = 0;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    const std::size_t j = cat.index_of(rainbow_rotate(cat[i], kWhiteBase));
    for (Color k = 1; k <= kCurveCount; ++k) {
      if (images[j][k] != images[i][wrap_color(k + 1, kCurveCount)]) ++rot_bad;
    }
  }
  r.checks.push_back(make("rainbow rotation shifts coordinates (all heights)", rot_bad == 0,
                          str(rot_bad) + " violations over " + str(cat.size()) + " heights"));

  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<std::size_t> pick(0, cat.size() - 1);
  std::uint64_t shift_bad = 0, checked = 0;
  for (int s = 0; s < 1000; ++s) {
    const std::size_t i = pick(rng);
    for (std::uint32_t u = 0; u < 32; ++u) {
      const std::size_t j = cat.index_of(shift(cat[i], Vertex{u}));
      const int eps = std::popcount(u) % 2 == 0 ? 1 : -1;
      for (Color k = 1; k <= kCurveCount; ++k) {
        const int sign = eps * color_split(5, k, kBlackBase, Vertex{u});
        if (images[j][k] != sign * images[i][k]) ++shift_bad;
      }
      ++checked;
    }
  }
  r.checks.push_back(make("shift law (1000 heights x 32 shifts)", shift_bad == 0,
                          str(shift_bad) + " violations over " + str(checked) + " pairs"));
  return r;
}

}  // namespace

bool SuiteReport::ok() const {
  for (const Check& c : checks) {
    if (!c.ok) return false;
  }
  return !checks.empty();
}

VerifyContext::VerifyContext(unsigned threads, std::function<void(std::string_view)> log)
    : threads_(threads), log_(std::move(log)) {}

void VerifyContext::log(std::string_view message) const {
  if (log_) log_(message);
}

const HeightCatalog& VerifyContext::catalog5() {
  if (!catalog_) {
    log("enumerating heights on H^5");
    EnumerateOptions opts;
    opts.threads = threads_;
    catalog_.emplace(enumerate_heights(5, opts));
  }
  return *catalog_;
}

const std::vector<JacobianImage>& VerifyContext::images5() {
  if (!images_) {
    const HeightCatalog& cat = catalog5();
    log("computing divisor images");
    images_.emplace(catalog_images(cat, threads_));
  }
  return *images_;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"counts",  "morse",    "steps",
                                                 "theorem", "geometry", "equivariance"};
  return names;
}

SuiteReport run_suite(std::string_view name, VerifyContext& ctx) {
  const auto t0 = std::chrono::steady_clock::now();
  ctx.log("suite " + std::string(name));
  SuiteReport r;
  if (name == "counts") {
    r = counts_suite(ctx);
  } else if (name == "morse") {
    r = morse_suite(ctx);
  } else if (name == "steps") {
    r = steps_suite(ctx);
  } else if (name == "theorem") {
    r = theorem_suite(ctx);
  } else if (name == "geometry") {
    r = geometry_suite(ctx);
  } else if (name == "equivariance") {
    r = equivariance_suite(ctx);
  } else {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<SuiteReport> run_suites(std::string_view name, VerifyContext& ctx) {
  std::vector<SuiteReport> out;
  if (name == "all") {
    for (const auto& s : suite_names()) out.push_back(run_suite(s, ctx));
  } else {
    out.push_back(run_suite(name, ctx));
  }
  return out;
}

std::string reports_to_json(const std::vector<SuiteReport>& reports) {
  using nlohmann::json;
  json suites = json::array();
  bool all_ok = true;
  for (const SuiteReport& r : reports) {
    json checks = json::array();
    for (const Check& c : r.checks) {
      checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    }
    suites.push_back({{"suite", r.suite}, {"ok", r.ok()}, {"checks", checks}});
    all_ok = all_ok && r.ok();
  }
  return json{{"ok", all_ok}, {"suites", suites}}.dump(2);
}

}  // namespace adinkra
