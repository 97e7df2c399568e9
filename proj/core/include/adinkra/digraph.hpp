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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adinkra/heights.hpp"

namespace adinkra {

/// Directed graph on dense node ids. Edges are sorted and unique.
struct Digraph {
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  std::size_t node_count = 0;
  std::vector<Edge> edges;

  std::vector<std::uint32_t> successors(std::uint32_t node) const;
  std::size_t out_degree(std::uint32_t node) const;
};

/// Gamma_N over catalog indices: i -> j iff catalog[j] is catalog[i] with one
/// local maximum lowered by 2.
Digraph lowering_digraph(const HeightCatalog& catalog);

/// Orbits of the hypercube automorphism group acting by h -> h o g.
struct ClassPartition {
  /// class_of[i] is the class id of catalog[i].
  std::vector<std::uint32_t> class_of;
  /// Members of each class in increasing catalog order. Classes are ordered
  /// by their smallest member.
  std::vector<std::vector<std::uint32_t>> members;

  std::size_t size() const { return members.size(); }
  std::vector<std::size_t> sizes() const;
};

ClassPartition comb_classes(const HeightCatalog& catalog);

/// The class-level digraph (self-loops kept: for n = 1 lowering maps the
/// single class to itself).
Digraph reduced_digraph(const Digraph& gamma, const ClassPartition& classes);

/// Checks that the class digraph is well defined in the strong sense: if one
/// member of class C lowers into class D then every member of C does.
/// Returns a failing (member, target class) pair, or nullopt.
std::optional<std::pair<std::uint32_t, std::uint32_t>> check_class_edges(
    const Digraph& gamma, const ClassPartition& classes);

/// Number of vertices on each level, from the top level down to 0.
std::vector<int> level_profile(const HeightFn& h);
/// Level profile as "h" followed by the counts, e.g. "h4741" for a height on
/// H^4 with levels of sizes 4, 7, 4, 1. Counts >= 10 are wrapped in
/// parentheses.
std::string profile_name(const HeightFn& h);

}  // namespace adinkra
