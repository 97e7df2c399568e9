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

// adinkra: command-line front end for the height/divisor library.
//
// Results go to stdout, progress and diagnostics to stderr. Vertices are
// written as bitmasks with bit j-1 holding coordinate x_j, or as tuples
// (x1,...,xn).

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "adinkra/digraph.hpp"
#include "adinkra/heights.hpp"
#include "adinkra/jacobian.hpp"
#include "adinkra/morse.hpp"
#include "adinkra/serialize.hpp"
#include "adinkra/session.hpp"
#include "adinkra/verify.hpp"
#include "service.hpp"

namespace {

using namespace adinkra;
using nlohmann::json;

// Exit codes.
constexpr int kOk = 0;
constexpr int kFailed = 1;   // a verification suite failed
constexpr int kBadInput = 2;
constexpr int kRefused = 3;  // resource refusal

struct Common {
  unsigned threads = 0;
  bool quiet = false;
};

std::function<void(std::size_t, std::size_t)> progress_printer(const Common& c, std::string label) {
  if (c.quiet) return nullptr;
  return [label, last = std::size_t{0}](std::size_t done, std::size_t total) mutable {
    const std::size_t pct = total == 0 ? 100 : done * 100 / total;
    if (pct == last && done != total) return;
    last = pct;
    std::cerr << "\r" << label << ": " << pct << "%" << (done == total ? "\n" : "") << std::flush;
  };
}

void note(const Common& c, const std::string& msg) {
  if (!c.quiet) std::cerr << msg << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// --- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  int n = 5;
  bool count_only = false;
  bool force = false;
  std::string out;
};

int cmd_enumerate(const EnumerateArgs& a, const Common& c) {
  if (a.n < 1 || a.n > kMaxDimension) {
    std::cerr << "error: n must be between 1 and " << kMaxDimension << "\n";
    return kBadInput;
  }
  EnumerateOptions opts;
  opts.threads = c.threads;
  opts.progress = progress_printer(c, "enumerate");
  if (a.n == 6) {
    if (!a.force) {
      std::cerr << "error: H^6 has about 3.3e10 heights; refusing without --force "
                   "(with --force the count is computed without materializing)\n";
      return kRefused;
    }
    if (!a.out.empty()) {
      std::cerr << "error: --out is not available for n = 6\n";
      return kRefused;
    }
    std::cout << count_heights(6, opts) << "\n";
    return kOk;
  }
  const HeightCatalog cat = enumerate_heights(a.n, opts);
  if (!a.out.empty() && !a.count_only) {
    std::ofstream out(a.out);
    if (!out) {
      std::cerr << "error: cannot write " << a.out << "\n";
      return kBadInput;
    }
    for (const HeightFn& h : cat) out << height_to_json(h) << "\n";
  }
  std::cout << cat.size() << "\n";
  return kOk;
}

// --- census ----------------------------------------------------------------

struct CensusArgs {
  int curve = 0;  // 0 = all
  std::string format = "csv";
};

int cmd_census(const CensusArgs& a, const Common& c) {
  EnumerateOptions opts;
  opts.threads = c.threads;
  opts.progress = progress_printer(c, "enumerate");
  const HeightCatalog cat = enumerate_heights(5, opts);
  note(c, "computing divisor images");
  const CensusResult r = census(catalog_images(cat, c.threads));
  const std::optional<Color> k = a.curve == 0 ? std::nullopt : std::optional<Color>(a.curve);
  if (a.format == "json") {
    std::cout << census_to_json(r, k) << "\n";
  } else {
    std::cout << census_to_csv(r, k);
  }
  return kOk;
}

// --- image -----------------------------------------------------------------

struct ImageArgs {
  std::string height_file;
  std::string pins;
  std::string named;
  int n = 5;
  std::string format = "text";
};

int cmd_image(const ImageArgs& a, const Common&) {
  HeightFn h;
  try {
    const int sources = !a.height_file.empty() + !a.pins.empty() + !a.named.empty();
    if (sources != 1) throw ParseError("give exactly one of --height, --pins, --named");
    if (!a.height_file.empty()) {
      h = height_from_json(read_file(a.height_file));
    } else if (!a.pins.empty()) {
      h = from_pins(a.n, parse_pins(a.n, a.pins));
    } else {
      h = named_height(a.n, a.named);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  if (h.dimension() != 5) {
    std::cerr << "error: divisor images are defined for n = 5 only\n";
    return kBadInput;
  }
  const MorseDivisor d = morse_divisor(h);
  const JacobianImage img = divisor_image(d);
  if (a.format == "json") {
    json out{{"height", json::parse(height_to_json(h))},
             {"divisor", json::parse(divisor_to_json(d))},
             {"image", json::parse(image_to_json(img))}};
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "height " << height_to_json(h) << "\n";
  std::cout << "divisor (degree " << d.degree() << ")\n";
  for (const DivisorTerm& t : d.terms()) {
    if (t.point.is_vertex()) {
      std::cout << "  vertex " << vertex_tuple(5, t.point.vertex);
    } else {
      const Face& f = t.point.face;
      std::cout << "  face   (" << f.first << "," << f.second(5) << ") at "
                << vertex_tuple(5, f.base);
    }
    std::cout << "  " << (t.kappa > 0 ? "+" : "") << t.kappa << "\n";
  }
  for (Color k = 1; k <= kCurveCount; ++k) {
    std::cout << "E" << k << ": " << describe(img[k]) << "  " << to_string(img[k]) << "\n";
  }
  return kOk;
}

// --- classes / gamma -------------------------------------------------------

struct GraphArgs {
  int n = 4;
  std::string format = "text";
  bool reduced = false;
};

std::vector<std::string> class_labels(const HeightCatalog& cat, const ClassPartition& cp) {
  // Profile names, with a letter suffix where several classes share one.
  std::map<std::string, int> seen, total;
  std::vector<std::string> base;
  for (const auto& m : cp.members) base.push_back(profile_name(cat[m.front()]));
  for (const auto& b : base) ++total[b];
  std::vector<std::string> out;
  for (const auto& b : base) {
    const int i = seen[b]++;
    out.push_back(total[b] > 1 ? b + static_cast<char>('a' + i) : b);
  }
  return out;
}

int check_graph_n(int n, int max_n) {
  if (n < 1 || n > max_n) {
    std::cerr << "error: n must be between 1 and " << max_n << "\n";
    return kBadInput;
  }
  return kOk;
}

int cmd_classes(const GraphArgs& a, const Common& c) {
  if (int rc = check_graph_n(a.n, 5)) return rc;
  EnumerateOptions opts;
  opts.threads = c.threads;
  const HeightCatalog cat = enumerate_heights(a.n, opts);
  note(c, "computing orbits");
  const ClassPartition cp = comb_classes(cat);
  const auto labels = class_labels(cat, cp);
  if (a.format == "json") {
    json classes = json::array();
    for (std::size_t i = 0; i < cp.size(); ++i) {
      classes.push_back({{"id", i},
                         {"label", labels[i]},
                         {"size", cp.members[i].size()},
                         {"representative", cat[cp.members[i].front()].to_vector()}});
    }
    std::cout << json{{"n", a.n}, {"heights", cat.size()}, {"classes", classes}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << cp.size() << " classes, " << cat.size() << " heights\n";
  for (std::size_t i = 0; i < cp.size(); ++i) {
    std::cout << labels[i] << "\t" << cp.members[i].size() << "\t"
              << height_to_json(cat[cp.members[i].front()]) << "\n";
  }
  return kOk;
}

int cmd_gamma(const GraphArgs& a, const Common& c) {
  if (int rc = check_graph_n(a.n, 5)) return rc;
  EnumerateOptions opts;
  opts.threads = c.threads;
  const HeightCatalog cat = enumerate_heights(a.n, opts);
  const Digraph g = lowering_digraph(cat);
  Digraph out = g;
  std::vector<std::string> labels;
  std::vector<std::size_t> sizes;
  if (a.reduced) {
    const ClassPartition cp = comb_classes(cat);
    out = reduced_digraph(g, cp);
    labels = class_labels(cat, cp);
    sizes = cp.sizes();
  } else {
    for (const HeightFn& h : cat) {
      std::string s;
      for (std::uint8_t x : h.values()) s += std::to_string(x);
      labels.push_back(s);
    }
  }
  if (a.format == "dot") {
    std::cout << digraph_to_dot(out, labels, a.reduced ? "reduced_gamma" : "gamma");
  } else {
    std::cout << digraph_to_json(out, labels, sizes) << "\n";
  }
  return kOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::string format = "text";
};

int cmd_verify(const VerifyArgs& a, const Common& c) {
  VerifyContext ctx(c.threads, [&](std::string_view m) { note(c, std::string(m)); });
  std::vector<SuiteReport> reports;
  try {
    reports = run_suites(a.suite, ctx);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (a.format == "json") {
    std::cout << reports_to_json(reports) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.suite << "\n";
      for (const auto& chk : r.checks) {
        std::cout << "  " << (chk.ok ? "ok   " : "FAIL ") << chk.name;
        if (!chk.detail.empty()) std::cout << " -- " << chk.detail;
        std::cout << "\n";
      }
    }
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Height functions, Morse divisors and Jacobian images on hypercube Adinkras.\n"
               "Vertices are bitmasks: bit j-1 holds coordinate x_j."};
  app.require_subcommand(1);
  Common common;
  app.add_option("--threads", common.threads, "worker threads (0 = all cores)");
  app.add_flag("-q,--quiet", common.quiet, "suppress progress on stderr");

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "enumerate heights on H^n and print the count");
  en->add_option("n", ea.n, "dimension")->required();
  en->add_flag("--count-only", ea.count_only, "print only the count");
  en->add_option("--out", ea.out, "write one height per line (JSON) to FILE");
  en->add_flag("--force", ea.force, "allow n = 6 (count only, roughly a minute per core)");

  CensusArgs ca;
  auto* ce = app.add_subcommand("census", "histogram of image coefficients over all heights on H^5");
  ce->add_option("--curve", ca.curve, "curve index k (default: all)")->check(CLI::Range(1, 5));
  ce->add_option("--format", ca.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  ImageArgs ia;
  auto* im = app.add_subcommand("image", "Morse divisor and Jacobian image of one height");
  im->add_option("--height", ia.height_file, "height JSON file {\"n\":5,\"values\":[...]}");
  im->add_option("--pins", ia.pins,
                 "pins such as \"all-white@1\" or \"(1,0,1,0,0)@2,(1,1,1,1,0)@2\" or \"31@5\"");
  im->add_option("--named", ia.named, "fully_extended, valise or inverted_valise");
  im->add_option("--n", ia.n, "dimension for --pins/--named")->check(CLI::Range(1, 5));
  im->add_option("--format", ia.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  GraphArgs cl;
  auto* cs = app.add_subcommand("classes", "equivalence classes of heights under cube symmetries");
  cs->add_option("n", cl.n, "dimension")->required();
  cs->add_option("--format", cl.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  GraphArgs ga;
  ga.format = "json";
  auto* gm = app.add_subcommand("gamma", "the lowering digraph on heights (or on classes)");
  gm->add_option("n", ga.n, "dimension")->required();
  gm->add_flag("--reduced", ga.reduced, "quotient by cube symmetries");
  gm->add_option("--format", ga.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "run invariant suites; nonzero exit on failure");
  ve->add_option("--suite", va.suite,
                 "counts, morse, steps, theorem, geometry, equivariance or all");
  ve->add_option("--format", va.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string snapshot;
  auto* se = app.add_subcommand("serve", "JSON-over-HTTP session service");
  se->add_option("--port", port, "port")->check(CLI::Range(1, 65535));
  se->add_option("--host", host, "bind address");
  se->add_option("--snapshot", snapshot, "load/save sessions to this JSON file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*en) return cmd_enumerate(ea, common);
    if (*ce) return cmd_census(ca, common);
    if (*im) return cmd_image(ia, common);
    if (*cs) return cmd_classes(cl, common);
    if (*gm) return cmd_gamma(ga, common);
    if (*ve) return cmd_verify(va, common);
    if (*se) {
      adinkra::service::Options opts;
      opts.threads = common.threads;
      if (!snapshot.empty()) opts.snapshot = snapshot;
      return adinkra::service::serve(host, port, opts);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kOk;
}
