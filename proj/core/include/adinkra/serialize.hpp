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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "adinkra/digraph.hpp"
#include "adinkra/heights.hpp"
#include "adinkra/jacobian.hpp"
#include "adinkra/morse.hpp"

namespace adinkra {

/// Malformed input text (bad JSON, wrong shape, invalid height).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"n": N, "values": [...]} with values in vertex-bitmask order.
std::string height_to_json(const HeightFn& h);
/// Parses and validates; the error message names the offending edge.
HeightFn height_from_json(std::string_view text);
/// Validated height from raw values (same error reporting).
HeightFn checked_height(int n, const std::vector<int>& values);

/// {"points": [{"type": "vertex"|"face", "id": ..., "kappa": ...}], "degree": d}.
/// Vertex ids are bitmasks; face ids index Hypercube::faces() and the entry
/// also carries "colors" and "base".
std::string divisor_to_json(const MorseDivisor& d);
/// {"curves": [{"k": 1, "a": ..., "b4": ..., "c2": ...}, ...]}.
std::string image_to_json(const JacobianImage& img);
/// Human-readable a*e_inf + b*e4 + c*e2, with O for the identity.
std::string describe(const GroupElt& g);

/// CSV with header k,a,frequency; one row per nonempty bin, all curves or
/// only curve k.
std::string census_to_csv(const CensusResult& c, std::optional<Color> k = std::nullopt);
std::string census_to_json(const CensusResult& c, std::optional<Color> k = std::nullopt);

/// {"nodes": [{"id", "label", "size"?}], "edges": [[from, to], ...]}.
std::string digraph_to_json(const Digraph& g, const std::vector<std::string>& labels,
                            const std::vector<std::size_t>& sizes = {});
std::string digraph_to_dot(const Digraph& g, const std::vector<std::string>& labels,
                           std::string_view name = "G");

/// Pin specifications: comma-separated `V@H` items where V is a vertex
/// bitmask (decimal), a coordinate tuple such as (1,0,1,0,0), or one of the
/// keywords all-white / all-black.
PinSet parse_pins(int n, std::string_view text);

/// Parses a vertex written as a bitmask or a coordinate tuple.
Vertex parse_vertex(int n, std::string_view text);
/// (x1,...,xn).
std::string vertex_tuple(int n, Vertex v);

}  // namespace adinkra
