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

#include <benchmark/benchmark.h>

#include "adinkra/geometry.hpp"
#include "adinkra/heights.hpp"
#include "adinkra/jacobian.hpp"
#include "adinkra/morse.hpp"

using namespace adinkra;

namespace {

const HeightCatalog& catalog5() {
  static const HeightCatalog cat = enumerate_heights(5);
  return cat;
}

void BM_Enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  EnumerateOptions opt;
  opt.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_heights(n, opt).size());
}
BENCHMARK(BM_Enumerate)->Args({4, 1})->Args({5, 1})->Args({5, 0})->Unit(benchmark::kMillisecond);

void BM_CountHeights(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_heights(n));
}
BENCHMARK(BM_CountHeights)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_MorseDivisor(benchmark::State& state) {
  const auto& cat = catalog5();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(morse_divisor(cat[i]));
    i = (i + 7919) % cat.size();
  }
}
BENCHMARK(BM_MorseDivisor);

void BM_HeightImage(benchmark::State& state) {
  const auto& cat = catalog5();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(height_image(cat[i]));
    i = (i + 7919) % cat.size();
  }
}
BENCHMARK(BM_HeightImage);

// Images of every n=5 height plus the census, threads = 0 means all cores.
void BM_Census(benchmark::State& state) {
  const auto& cat = catalog5();
  for (auto _ : state) {
    const auto images = catalog_images(cat, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(census(images));
  }
}
BENCHMARK(BM_Census)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_CrossValidate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(geometry::cross_validate().passed);
}
BENCHMARK(BM_CrossValidate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
