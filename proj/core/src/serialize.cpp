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

#include "adinkra/serialize.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

namespace adinkra {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(std::string_view s, const char* what) {
  int out = 0;
  const auto t = trim(s);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty()) {
    throw ParseError(std::string("expected an integer ") + what + ", got '" + t + "'");
  }
  return out;
}

std::string term_name(std::int64_t coeff, const char* gen) {
  if (coeff == 1) return gen;
  if (coeff == -1) return std::string("-") + gen;
  return std::to_string(coeff) + " " + gen;
}

json census_bins(const CensusResult& c, Color k) {
  json bins = json::array();
  for (const auto& [a, f] : c.histogram[k - 1]) bins.push_back({{"a", a}, {"frequency", f}});
  return bins;
}

}  // namespace

std::string height_to_json(const HeightFn& h) {
  return json{{"n", h.dimension()}, {"values", h.to_vector()}}.dump();
}

HeightFn checked_height(int n, const std::vector<int>& values) {
  if (n < 1 || n > kMaxDimension) throw ParseError("dimension must be in [1, 6]");
  if (values.size() != (std::size_t{1} << n)) {
    throw ParseError("expected " + std::to_string(std::size_t{1} << n) + " values for n = " +
                     std::to_string(n) + ", got " + std::to_string(values.size()));
  }
  // Accept any translate; validate() insists on min 0 so check the shifted copy.
  std::vector<int> shifted = values;
  const int lo = *std::min_element(shifted.begin(), shifted.end());
  for (int& x : shifted) x -= lo;
  const Validation v = validate(n, shifted);
  if (!v) {
    std::string msg = "invalid height: " + v.reason;
    if (v.witness) {
      msg += " (vertices " + std::to_string(v.witness->first.bits) + " and " +
             std::to_string(v.witness->second.bits) + ")";
    }
    throw ParseError(msg);
  }
  return HeightFn(n, shifted);
}

HeightFn height_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("values")) {
    throw ParseError(R"(height JSON must be an object with "n" and "values")");
  }
  try {
    return checked_height(doc.at("n").get<int>(), doc.at("values").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad height JSON: ") + e.what());
  }
}

std::string divisor_to_json(const MorseDivisor& d) {
  json points = json::array();
  const int n = d.dimension();
  for (const DivisorTerm& t : d.terms()) {
    if (t.point.is_vertex()) {
      points.push_back({{"type", "vertex"}, {"id", t.point.vertex.bits}, {"kappa", t.kappa}});
    } else {
      const Hypercube cube(n);
      const Face& f = t.point.face;
      points.push_back({{"type", "face"},
                        {"id", cube.face_index(f)},
                        {"colors", {f.first, f.second(n)}},
                        {"base", f.base.bits},
                        {"kappa", t.kappa}});
    }
  }
  return json{{"points", points}, {"degree", d.degree()}}.dump();
}

std::string image_to_json(const JacobianImage& img) {
  json curves = json::array();
  for (Color k = 1; k <= kCurveCount; ++k) {
    curves.push_back({{"k", k}, {"a", img[k].a}, {"b4", img[k].b}, {"c2", img[k].c}});
  }
  return json{{"curves", curves}}.dump();
}

std::string describe(const GroupElt& g) {
  if (g.is_identity()) return "O";
  std::vector<std::string> parts;
  if (g.a != 0) parts.push_back(term_name(g.a, "e_inf"));
  if (g.b != 0) parts.push_back(term_name(g.b == 3 ? -1 : g.b, "e4"));
  if (g.c != 0) parts.push_back("e2");
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i][0] == '-') {
      out += " - " + parts[i].substr(1);
    } else {
      out += " + " + parts[i];
    }
  }
  return out;
}

std::string census_to_csv(const CensusResult& c, std::optional<Color> k) {
  std::ostringstream os;
  os << "k,a,frequency\n";
  for (Color kk = 1; kk <= kCurveCount; ++kk) {
    if (k && *k != kk) continue;
    for (const auto& [a, f] : c.histogram[kk - 1]) os << kk << ',' << a << ',' << f << '\n';
  }
  return os.str();
}

std::string census_to_json(const CensusResult& c, std::optional<Color> k) {
  json curves = json::array();
  for (Color kk = 1; kk <= kCurveCount; ++kk) {
    if (k && *k != kk) continue;
    curves.push_back({{"k", kk}, {"bins", census_bins(c, kk)}});
  }
  return json{{"heights", c.heights}, {"off_line", c.off_line}, {"max_abs_a", c.max_abs_a},
              {"curves", curves}}
      .dump();
}

std::string digraph_to_json(const Digraph& g, const std::vector<std::string>& labels,
                            const std::vector<std::size_t>& sizes) {
  json nodes = json::array();
  for (std::size_t i = 0; i < g.node_count; ++i) {
    json node{{"id", i}, {"label", i < labels.size() ? labels[i] : std::to_string(i)}};
    if (i < sizes.size()) node["size"] = sizes[i];
    nodes.push_back(std::move(node));
  }
  json edges = json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  return json{{"nodes", nodes}, {"edges", edges}}.dump();
}

std::string digraph_to_dot(const Digraph& g, const std::vector<std::string>& labels,
                           std::string_view name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (std::size_t i = 0; i < g.node_count; ++i) {
    os << "  n" << i << " [label=\"" << (i < labels.size() ? labels[i] : std::to_string(i))
       << "\"];\n";
  }
  for (const auto& [a, b] : g.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

Vertex parse_vertex(int n, std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError("empty vertex");
  std::uint32_t bits = 0;
  if (t.front() == '(') {
    if (t.back() != ')') throw ParseError("unterminated vertex tuple '" + t + "'");
    std::string_view body(t);
    body = body.substr(1, body.size() - 2);
    int j = 0;
    while (true) {
      const auto comma = body.find(',');
      const int x = parse_int(body.substr(0, comma), "coordinate");
      if (x != 0 && x != 1) throw ParseError("vertex coordinates must be 0 or 1");
      if (j >= n) throw ParseError("vertex tuple has more than " + std::to_string(n) + " entries");
      bits |= static_cast<std::uint32_t>(x) << j;
      ++j;
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
    }
    if (j != n) throw ParseError("vertex tuple needs " + std::to_string(n) + " entries");
  } else {
    const int b = parse_int(t, "vertex");
    if (b < 0 || b >= (1 << n)) {
      throw ParseError("vertex " + t + " outside H^" + std::to_string(n));
    }
    bits = static_cast<std::uint32_t>(b);
  }
  return Vertex{bits};
}

std::string vertex_tuple(int n, Vertex v) {
  std::string out = "(";
  for (Color j = 1; j <= n; ++j) {
    if (j > 1) out += ',';
    out += v.bit(j) ? '1' : '0';
  }
  return out + ")";
}

PinSet parse_pins(int n, std::string_view text) {
  const Hypercube cube(n);
  PinSet pins;
  // Split on commas that are not inside a tuple.
  std::vector<std::string> items;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  items.push_back(cur);
  for (const std::string& raw : items) {
    const std::string item = trim(raw);
    const auto at = item.rfind('@');
    if (at == std::string::npos) throw ParseError("pin '" + item + "' is missing '@height'");
    const std::string what = trim(item.substr(0, at));
    const int height = parse_int(item.substr(at + 1), "pin height");
    if (what == "all-white" || what == "all-black") {
      const bool white = what == "all-white";
      for (std::uint32_t v = 0; v < cube.vertex_count(); ++v) {
        if (cube.is_white(Vertex{v}) == white) pins.push_back({Vertex{v}, height});
      }
    } else {
      pins.push_back({parse_vertex(n, what), height});
    }
  }
  if (pins.empty()) throw ParseError("no pins given");
  return pins;
}

}  // namespace adinkra
