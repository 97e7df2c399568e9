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
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "adinkra/heights.hpp"
#include "parallel.hpp"

namespace adinkra {

namespace {

struct ProgressSink {
  ProgressSink(const EnumerateOptions& o, std::size_t t) : options(o), total(t) {}

  const EnumerateOptions& options;
  std::size_t total;
  std::atomic<std::size_t> done{0};
  std::mutex mu;

  void tick(std::size_t units) {
    const std::size_t now = done.fetch_add(units) + units;
    if (!options.progress) return;
    std::lock_guard lock(mu);
    options.progress(now, total);
  }
};

std::vector<HeightFn> base_heights() {
  const int up[] = {0, 1};
  const int down[] = {1, 0};
  return {HeightFn(1, up), HeightFn(1, down)};
}

// Glues bottom and top (both heights on H^{n-1}) with the top raised by s.
// Returns false if some vertical edge fails |difference| = 1.
bool glue(const HeightFn& bottom, const HeightFn& top, int s, std::vector<int>& out) {
  const std::size_t half = bottom.size();
  for (std::uint32_t v = 0; v < half; ++v) {
    const int b = bottom[Vertex{v}];
    const int t = top[Vertex{v}] + s;
    if (b - t != 1 && t - b != 1) return false;
    out[v] = b;
    out[v + half] = t;
  }
  return true;
}

std::vector<HeightFn> glue_all(int n, const std::vector<HeightFn>& lower_dim,
                               const EnumerateOptions& options) {
  const std::size_t m = lower_dim.size();
  const unsigned threads = detail::resolve_threads(options.threads);
  const std::size_t chunks = std::min<std::size_t>(m, std::size_t{threads} * 8);
  std::vector<std::vector<HeightFn>> parts(chunks);
  ProgressSink progress{options, m};

  detail::for_chunks(m, chunks, threads, [&](std::size_t c, std::size_t lo, std::size_t hi) {
    std::vector<int> raw(std::size_t{1} << n);
    auto& part = parts[c];
    for (std::size_t i = lo; i < hi; ++i) {
      const HeightFn& bottom = lower_dim[i];
      for (const HeightFn& top : lower_dim) {
        // Vertex 0 pins the offset: the two shifts that make its vertical
        // edge valid are the only candidates.
        const int d = bottom[Vertex{0}] - top[Vertex{0}];
        for (int s : {d - 1, d + 1}) {
          if (glue(bottom, top, s, raw)) part.emplace_back(n, raw);
        }
      }
      progress.tick(1);
    }
  });

  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  std::vector<HeightFn> all;
  all.reserve(total);
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

// Number of down-closed subsets of a poset on <= 32 elements. above[x] is the
// strict up-set of x and below[x] the strict down-set (transitively closed).
class IdealCounter {
 public:
  IdealCounter(std::vector<std::uint32_t> above, std::vector<std::uint32_t> below)
      : above_(std::move(above)), below_(std::move(below)) {}

  std::uint64_t count(std::uint32_t mask) {
    if (mask == 0) return 1;
    if (const auto it = memo_.find(mask); it != memo_.end()) return it->second;

    // Split off the connected component containing the lowest element.
    std::uint32_t comp = mask & (~mask + 1);
    for (std::uint32_t frontier = comp; frontier != 0;) {
      std::uint32_t grow = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
        const int x = std::countr_zero(f);
        grow |= (above_[x] | below_[x]) & mask;
      }
      frontier = grow & ~comp;
      comp |= grow;
    }
    std::uint64_t result;
    if (comp != mask) {
      result = count(comp) * count(mask & ~comp);
    } else {
      // Branch on the element with the most relations to shrink both sides.
      int pivot = -1;
      int best = -1;
      for (std::uint32_t f = mask; f != 0; f &= f - 1) {
        const int x = std::countr_zero(f);
        const int degree = std::popcount((above_[x] | below_[x]) & mask);
        if (degree > best) {
          best = degree;
          pivot = x;
        }
      }
      if (best == 0) {
        result = std::uint64_t{1} << std::popcount(mask);
      } else {
        const std::uint32_t bit = 1u << pivot;
        const std::uint32_t without = mask & ~(above_[pivot] | bit);
        const std::uint32_t with = mask & ~(below_[pivot] | bit);
        result = count(without) + count(with);
      }
    }
    memo_.emplace(mask, result);
    return result;
  }

 private:
  std::vector<std::uint32_t> above_;
  std::vector<std::uint32_t> below_;
  std::unordered_map<std::uint32_t, std::uint64_t> memo_;
};

// Tops g with |g - b| = 1 pointwise that are heights themselves. Writing
// g = b + e with e in {-1, +1}, an edge u-v with b(u) = b(v) + 1 forbids
// e(u) = +1, e(v) = -1, so {e = +1} is a down-set of the order that b
// induces on H^{n-1}.
std::uint64_t count_tops(const HeightFn& b) {
  const int m = b.dimension();
  const std::size_t size = b.size();
  std::vector<std::uint32_t> below(size, 0), above(size, 0);
  // Visit vertices by increasing b so a lower neighbor's closure is already
  // complete when it is absorbed.
  std::vector<std::uint32_t> order(size);
  for (std::uint32_t v = 0; v < size; ++v) order[v] = v;
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t x, std::uint32_t y) { return b[Vertex{x}] < b[Vertex{y}]; });
  for (std::uint32_t v : order) {
    for (Color j = 1; j <= m; ++j) {
      const std::uint32_t u = Vertex{v}.flipped(j).bits;
      if (b[Vertex{u}] + 1 == b[Vertex{v}]) below[v] |= below[u] | (1u << u);
    }
  }
  for (std::uint32_t v = 0; v < size; ++v) {
    for (std::uint32_t f = below[v]; f != 0; f &= f - 1) above[std::countr_zero(f)] |= 1u << v;
  }
  const std::uint32_t all = size == 32 ? 0xFFFFFFFFu : ((1u << size) - 1);
  IdealCounter counter(std::move(above), std::move(below));
  return counter.count(all);
}

// Proper 3-colorings of H^m (m may be 0), two bits per vertex.
std::vector<std::uint64_t> three_colorings(int m) {
  const std::uint32_t size = 1u << m;
  std::vector<std::uint64_t> out;
  std::vector<int> color(size, -1);
  auto dfs = [&](auto&& self, std::uint32_t v) -> void {
    if (v == size) {
      std::uint64_t code = 0;
      for (std::uint32_t i = 0; i < size; ++i) code |= std::uint64_t(color[i]) << (2 * i);
      out.push_back(code);
      return;
    }
    for (int c = 0; c < 3; ++c) {
      bool ok = true;
      for (int j = 0; j < m && ok; ++j) {
        const std::uint32_t u = v ^ (1u << j);
        if (u < v && color[u] == c) ok = false;
      }
      if (!ok) continue;
      color[v] = c;
      self(self, v + 1);
    }
    color[v] = -1;
  };
  dfs(dfs, 0);
  return out;
}

}  // namespace

HeightCatalog enumerate_heights(int n, const EnumerateOptions& options) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("enumerate_heights: bad dimension");
  if (n > 5) {
    throw std::length_error("enumerate_heights: materializing H^" + std::to_string(n) +
                            " is not supported; use count_heights");
  }
  std::vector<HeightFn> current = base_heights();
  for (int d = 2; d <= n; ++d) {
    EnumerateOptions stage = options;
    if (d != n) stage.progress = nullptr;
    current = glue_all(d, current, stage);
  }
  return HeightCatalog(n, std::move(current));
}

std::uint64_t count_heights(int n, const EnumerateOptions& options) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("count_heights: bad dimension");
  if (n == 1) return 2;
  EnumerateOptions quiet = options;
  quiet.progress = nullptr;
  const HeightCatalog lower_dim = enumerate_heights(n - 1, quiet);
  const std::size_t m = lower_dim.size();
  const unsigned threads = detail::resolve_threads(options.threads);
  const std::size_t chunks = std::min<std::size_t>(m, std::size_t{threads} * 16);
  std::vector<std::uint64_t> partial(chunks, 0);
  ProgressSink progress{options, m};
  detail::for_chunks(m, chunks, threads, [&](std::size_t c, std::size_t lo, std::size_t hi) {
    std::uint64_t sum = 0;
    for (std::size_t i = lo; i < hi; ++i) sum += count_tops(lower_dim[i]);
    partial[c] = sum;
    progress.tick(hi - lo);
  });
  std::uint64_t total = 0;
  for (auto p : partial) total += p;
  return total;
}

std::uint64_t count_three_colorings(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("count_three_colorings: supported for 1 <= n <= 5");
  const int m = n - 1;
  const std::vector<std::uint64_t> halves = three_colorings(m);
  const std::uint32_t size = 1u << m;
  // Two halves glue iff they differ at every vertex. With colors packed two
  // bits each, check per vertex directly; the lists are small.
  std::uint64_t total = 0;
  for (std::uint64_t a : halves) {
    for (std::uint64_t b : halves) {
      bool ok = true;
      for (std::uint32_t v = 0; v < size && ok; ++v) {
        ok = ((a >> (2 * v)) & 3u) != ((b >> (2 * v)) & 3u);
      }
      total += ok ? 1 : 0;
    }
  }
  return total;
}

}  // namespace adinkra
