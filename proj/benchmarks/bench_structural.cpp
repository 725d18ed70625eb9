/* Copyright 2026 The Witt Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <benchmark/benchmark.h>

#include "witt/rings.hpp"
#include "witt/structural.hpp"

namespace {

using namespace witt;

void BM_StructuralZ(benchmark::State& state) {
  const auto p = state.range(0);
  const auto n = static_cast<std::size_t>(state.range(1));
  const auto op = static_cast<WittOp>(state.range(2));
  const auto ctx = WittContext::make(integers(), Integer(p), n);
  std::size_t terms = 0;
  for (auto _ : state) {
    clear_structural_cache();
    terms = structural_polys(ctx, op)->term_count();
  }
  state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_StructuralZ)
    ->Args({2, 3, static_cast<int>(WittOp::Sum)})
    ->Args({2, 3, static_cast<int>(WittOp::Product)})
    ->Args({2, 4, static_cast<int>(WittOp::Sum)})
    ->Args({3, 2, static_cast<int>(WittOp::Product)})
    ->Args({3, 3, static_cast<int>(WittOp::Sum)})
    ->Unit(benchmark::kMillisecond);

void BM_StructuralFt(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const auto ctx = WittContext::make(univariate(p), FpPoly(p, {0, 1}), n);
  for (auto _ : state) {
    clear_structural_cache();
    benchmark::DoNotOptimize(structural_polys(ctx, WittOp::Product));
  }
}
BENCHMARK(BM_StructuralFt)->Args({2, 4})->Args({3, 4})->Args({5, 3})->Unit(benchmark::kMicrosecond);

void BM_StructuralCached(benchmark::State& state) {
  const auto ctx = WittContext::make(integers(), Integer(2), 3);
  structural_polys(ctx, WittOp::Product);
  for (auto _ : state) benchmark::DoNotOptimize(structural_polys(ctx, WittOp::Product));
}
BENCHMARK(BM_StructuralCached);

}  // namespace
