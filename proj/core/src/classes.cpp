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

#include <algorithm>
#include <numeric>

#include "adinkra/digraph.hpp"

namespace adinkra {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Keep the smaller index as root so roots are canonical.
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

std::vector<std::uint32_t> Digraph::successors(std::uint32_t node) const {
  std::vector<std::uint32_t> out;
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{node, 0});
  for (; it != edges.end() && it->first == node; ++it) out.push_back(it->second);
  return out;
}

std::size_t Digraph::out_degree(std::uint32_t node) const { return successors(node).size(); }

Digraph lowering_digraph(const HeightCatalog& catalog) {
  Digraph g;
  g.node_count = catalog.size();
  for (std::uint32_t i = 0; i < catalog.size(); ++i) {
    for (Vertex v : lowering_targets(catalog[i])) {
      const auto j = static_cast<std::uint32_t>(catalog.index_of(lower(catalog[i], v)));
      g.edges.emplace_back(i, j);
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

std::vector<std::size_t> ClassPartition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.size());
  return out;
}

ClassPartition comb_classes(const HeightCatalog& catalog) {
  const Hypercube cube(catalog.dimension());
  const auto generators = cube.automorphism_generators();
  DisjointSets sets(catalog.size());
  // Orbits of a group are the connected components of its generator graph.
  for (std::uint32_t i = 0; i < catalog.size(); ++i) {
    for (const auto& g : generators) {
      sets.unite(i, static_cast<std::uint32_t>(catalog.index_of(act(catalog[i], g))));
    }
  }
  ClassPartition out;
  out.class_of.assign(catalog.size(), 0);
  std::vector<std::int64_t> id_of_root(catalog.size(), -1);
  for (std::uint32_t i = 0; i < catalog.size(); ++i) {
    const std::uint32_t r = sets.find(i);
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<std::int64_t>(out.members.size());
      out.members.emplace_back();
    }
    const auto id = static_cast<std::uint32_t>(id_of_root[r]);
    out.class_of[i] = id;
    out.members[id].push_back(i);
  }
  return out;
}

Digraph reduced_digraph(const Digraph& gamma, const ClassPartition& classes) {
  Digraph r;
  r.node_count = classes.size();
  r.edges.reserve(gamma.edges.size());
  for (const auto& [a, b] : gamma.edges) r.edges.emplace_back(classes.class_of[a], classes.class_of[b]);
  std::sort(r.edges.begin(), r.edges.end());
  r.edges.erase(std::unique(r.edges.begin(), r.edges.end()), r.edges.end());
  return r;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> check_class_edges(
    const Digraph& gamma, const ClassPartition& classes) {
  const Digraph reduced = reduced_digraph(gamma, classes);
  for (const auto& [c, d] : reduced.edges) {
    for (std::uint32_t member : classes.members[c]) {
      bool reaches = false;
      for (std::uint32_t t : gamma.successors(member)) {
        if (classes.class_of[t] == d) {
          reaches = true;
          break;
        }
      }
      if (!reaches) return std::pair{member, d};
    }
  }
  return std::nullopt;
}

std::vector<int> level_profile(const HeightFn& h) {
  std::vector<int> counts(h.max_height() + 1, 0);
  for (std::uint8_t x : h.values()) ++counts[x];
  std::reverse(counts.begin(), counts.end());
  return counts;
}

std::string profile_name(const HeightFn& h) {
  std::string out = "h";
  for (int c : level_profile(h)) {
    out += c < 10 ? std::to_string(c) : "(" + std::to_string(c) + ")";
  }
  return out;
}

}  // namespace adinkra
