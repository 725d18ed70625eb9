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

#include <doctest.h>

#include "helpers.hpp"
#include "witt/descent.hpp"

using namespace witt;
using testing::el;
using testing::error_of;

namespace {

void require_pass(const Report& r) {
  CHECK_FALSE(r.empty());
  for (const auto& c : r) {
    CAPTURE(c.claim_id);
    CAPTURE(c.failures.empty() ? std::string() : c.failures.front());
    CHECK(c.passed());
    CHECK(c.universe_size > 0);
  }
}

}  // namespace

TEST_SUITE("descent_check") {

TEST_CASE("alpha map") {
  auto Z = AlgebraStructure::identity(integers());
  const auto ctx = WittContext::make(integers(), Integer(2), 1);
  const WittVector w(ctx, Z, {Integer(3), Integer(1)});
  const auto [head, g] = alpha_map(w);
  CHECK(head.to_string() == "(3)");
  CHECK(g == Value(Integer(11)));
  CHECK(error_of([&] { alpha_map(WittVector(ctx.with_length(0), Z, {Integer(1)})); }) == ErrorCode::LengthZero);
}

TEST_CASE("enumeration of finite Witt rings") {
  const auto ctx = WittContext::make(integers(), Integer(2), 1);
  CHECK(enumerate_witt(ctx, AlgebraStructure::make(integers(), integers_mod(4))).size() == 16);
  CHECK(enumerate_witt(ctx.with_length(2), AlgebraStructure::make(integers(), prime_field(2))).size() == 8);
  CHECK(error_of([&] { enumerate_witt(ctx, AlgebraStructure::identity(integers())); }) == ErrorCode::Unsupported);
}

TEST_CASE("battery reports close at n = 1") {
  for (const auto& fc : standard_finite_battery()) {
    CAPTURE(fc.alg->name());
    const auto ctx = fc.ctx.with_length(1);
    require_pass(kernel_report(fc.alg, ctx));
    require_pass(equalizer_report(fc.alg, ctx));
    require_pass(ghost_congruence_report(fc.alg, ctx));
    require_pass(alpha_homomorphism_report(fc.alg, ctx));
    for (std::size_t j = 0; j <= 2; ++j) require_pass(v_sequence_report(fc.alg, ctx, j));
  }
}

TEST_CASE("sampled enumeration is reproducible") {
  auto Z9 = AlgebraStructure::make(integers(), integers_mod(9));
  const auto ctx = WittContext::make(integers(), Integer(3), 1);
  const auto a = alpha_homomorphism_report(Z9, ctx, {500, 4});
  const auto b = alpha_homomorphism_report(Z9, ctx, {500, 4});
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(a[k].universe_size == b[k].universe_size);
  require_pass(a);
}

TEST_CASE("ideals") {
  auto Z8 = AlgebraStructure::make(integers(), integers_mod(8));
  const auto ctx = WittContext::make(integers(), Integer(2), 1);
  require_pass(ideal_product_report(Z8, ctx, Integer(2), Integer(4)));
  require_pass(nilpotent_ideal_report(Z8, ctx, Integer(4), 2));
  require_pass(nilpotent_ideal_report(Z8, ctx, Integer(2), 3));
  require_pass(alpha_injective_report(ctx.with_length(2), 2));
}

TEST_CASE("surjectivity") {
  auto Z = integers();
  auto dual = AlgebraStructure::make(Z, quotient(univariate(2), FpPoly(2, {0, 0, 1})));
  auto F2 = AlgebraStructure::make(Z, prime_field(2));
  const auto ctx = WittContext::make(Z, Integer(2), 2);
  require_pass(surjectivity_report(induced_map(dual, F2), ctx));
  require_pass(surjectivity_report(induced_map(AlgebraStructure::make(Z, integers_mod(8)),
                                               AlgebraStructure::make(Z, integers_mod(4))),
                                   ctx));
  const auto collapse = induced_map(dual, dual, {dual->target()->zero()});
  CHECK(error_of([&] { surjectivity_report(collapse, ctx); }) == ErrorCode::NotSurjective);
}

}  // TEST_SUITE
