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

#include <random>

#include "witt/delta.hpp"
#include "witt/rings.hpp"
#include "witt/selftest.hpp"
#include "witt/witt_vector.hpp"

namespace {

using namespace witt;

// range(0): EvalPath; range(1): 0 for Z, 1 for Z/8.
void BM_Mul(benchmark::State& state) {
  const auto path = static_cast<EvalPath>(state.range(0));
  const RingPtr Z = integers();
  const auto alg = state.range(1) == 0 ? AlgebraStructure::identity(Z) : AlgebraStructure::make(Z, integers_mod(8));
  const auto ctx = WittContext::make(Z, Integer(2), 3);
  std::mt19937_64 rng(1);
  const auto a = random_vector(ctx, alg, rng), b = random_vector(ctx, alg, rng);
  mul(a, b, EvalPath::Structural);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b, path));
}
BENCHMARK(BM_Mul)
    ->Args({static_cast<int>(EvalPath::Structural), 0})
    ->Args({static_cast<int>(EvalPath::Ghost), 0})
    ->Args({static_cast<int>(EvalPath::Structural), 1})
    ->Args({static_cast<int>(EvalPath::Cover), 1});

void BM_Add(benchmark::State& state) {
  const RingPtr F2t = univariate(2);
  const auto alg = AlgebraStructure::identity(F2t);
  const auto ctx = WittContext::make(F2t, FpPoly(2, {0, 1}), static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(2);
  const auto a = random_vector(ctx, alg, rng), b = random_vector(ctx, alg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(add(a, b));
}
BENCHMARK(BM_Add)->Arg(2)->Arg(4);

void BM_Coaction(benchmark::State& state) {
  const auto spec =
      FrobeniusLiftSpec::from_json(R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 2"}}})");
  const Value a = *spec.ring()->generator("x");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(coaction(spec, 0, a, n));
}
BENCHMARK(BM_Coaction)->Arg(1)->Arg(2)->Arg(3);

}  // namespace
