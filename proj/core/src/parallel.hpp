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

// Minimal fork-join helpers. Work is split into contiguous chunks and every
// chunk writes only to its own slot, so results never depend on scheduling.

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace adinkra::detail {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Calls body(chunk_index, begin, end) over [0, total) split into `chunks`
// nearly equal pieces, running up to `threads` at a time. Exceptions thrown
// by a chunk are rethrown on the caller after all workers join.
template <class Body>
void for_chunks(std::size_t total, std::size_t chunks, unsigned threads, Body&& body) {
  if (total == 0) return;
  chunks = std::max<std::size_t>(1, std::min(chunks, total));
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  auto bounds = [&](std::size_t c) { return total * c / chunks; };
  if (threads == 1) {
    for (std::size_t c = 0; c < chunks; ++c) body(c, bounds(c), bounds(c + 1));
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t c = t; c < chunks; c += threads) body(c, bounds(c), bounds(c + 1));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace adinkra::detail
