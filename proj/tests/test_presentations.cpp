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
#include "oracle/frozen_values.hpp"
#include "witt/presentations.hpp"
#include "witt/structural.hpp"

using namespace witt;
using testing::el;
using testing::error_of;

TEST_SUITE("presentations") {

TEST_CASE("styles") {
  CHECK(parse_style("theta") == PresentationStyle::Theta);
  CHECK(style_name(PresentationStyle::Delta) == "delta");
  CHECK(error_of([] { parse_style("gamma"); }) == ErrorCode::ParseError);
}

TEST_CASE("operator rings name variables by generator, then index") {
  const auto p = make_presentation(integers(), {"x", "y"}, {});
  const auto S = operator_ring(*p.ring, 1, PresentationStyle::Theta);
  CHECK(S->var_names() == std::vector<std::string>{"theta0(x)", "theta1(x)", "theta0(y)", "theta1(y)"});
}

TEST_CASE("coordinate change matches the oracle") {
  for (const auto& [p, polys] : frozen::coord_change()) {
    CAPTURE(p);
    const auto c = coord_change(WittContext::make(integers(), Integer(p), 3));
    REQUIRE(c->delta_of_theta.size() == polys.size());
    for (std::size_t k = 0; k < polys.size(); ++k) {
      CAPTURE(k);
      CHECK(c->theta_ring->format(c->delta_of_theta[k]) == c->theta_ring->format(el(c->theta_ring, polys[k])));
    }
  }
  const auto c = coord_change(WittContext::make(integers(), Integer(2), 2));
  CHECK(c->delta_ring->format(c->theta_of_delta[2]) == "delta0^2*delta1 + delta1^2 + delta2");
}

TEST_CASE("theta expansion of a square") {
  const auto ctx = WittContext::make(integers(), Integer(2), 2);
  const auto p = make_presentation(integers(), {"x"}, {"x^2"});
  const auto th = theta_expand(*p.ring, p.relations[0], ctx);
  const auto S = operator_ring(*p.ring, 2, PresentationStyle::Theta);
  // The product polynomials with a = b.
  const auto& P = frozen::structural()[1];
  REQUIRE(std::string(P.op) == "product");
  auto sp = structural_polys(ctx, WittOp::Product);
  auto alg = AlgebraStructure::make(integers(), S);
  std::vector<Value> images;
  for (int twice = 0; twice < 2; ++twice) {
    for (std::size_t i = 0; i <= 2; ++i) images.push_back(S->variable(i));
  }
  for (std::size_t k = 0; k <= 2; ++k) {
    CHECK(S->equal(th[k], evaluate(*sp->ring, el(sp->ring, P.polys[k]), *alg, images)));
  }
  CHECK(S->format(th[0]) == "theta0(x)^2");
  CHECK(S->format(th[1]) == "2*theta0(x)^2*theta1(x) + 2*theta1(x)^2");
}

TEST_CASE("delta and theta expansions agree after the change of coordinates") {
  for (long p : {2, 3}) {
    const auto ctx = WittContext::make(integers(), Integer(p), 2);
    const auto pr = make_presentation(integers(), {"x", "y"}, {"x*y - 3", "x^2 + y + 1"});
    for (const auto& f : pr.relations) {
      const auto lhs = delta_to_theta(*pr.ring, delta_expand(*pr.ring, f, ctx), ctx);
      const auto rhs = theta_vector_to_delta(*pr.ring, theta_expand(*pr.ring, f, ctx), ctx);
      REQUIRE(lhs.size() == rhs.size());
      for (std::size_t k = 0; k < lhs.size(); ++k) CHECK(lhs[k] == rhs[k]);
    }
  }
}

TEST_CASE("delta expansion by hand") {
  const auto ctx = WittContext::make(integers(), Integer(2), 1);
  const auto pr = make_presentation(integers(), {"x"}, {"x + 1"});
  const auto d = delta_expand(*pr.ring, pr.relations[0], ctx);
  const auto S = operator_ring(*pr.ring, 1, PresentationStyle::Delta);
  // delta(x + 1) = delta(x) + delta(1) + C_2(x, 1) = delta(x) - x.
  CHECK(S->format(d[1]) == "-delta0(x) + delta1(x)");
}

TEST_CASE("lambda presentations") {
  const auto ctx = WittContext::make(integers(), Integer(3), 1);
  const auto L = lambda_presentation(make_presentation(integers(), {"x"}, {"x^2 - 1"}), ctx, PresentationStyle::Theta);
  CHECK(L.generators == std::vector<std::string>{"theta0(x)", "theta1(x)"});
  REQUIRE(L.relations.size() == 2);
  CHECK(L.ring->format(L.relations[0]) == "theta0(x)^2 - 1");
  CHECK(L.to_text().find("theta1(x)") != std::string::npos);
  CHECK(L.to_json().find("\"relations\"") != std::string::npos);
  CHECK(error_of([&] { make_presentation(integers(), {"x"}, {"y"}); }) == ErrorCode::ParseError);

  auto F3t = univariate(3);
  const auto Lt = lambda_presentation(make_presentation(F3t, {"x"}, {"x^3 - t"}),
                                      WittContext::make(F3t, el(F3t, "t"), 1), PresentationStyle::Delta);
  CHECK(Lt.relations.size() == 2);
}

TEST_CASE("W_n presentations") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& c : verify_wn_presentation(integers(), Integer(2), n)) CHECK(c.passed());
  }
  auto F3t = univariate(3);
  for (const auto& c : verify_wn_presentation(F3t, el(F3t, "t"), 2)) CHECK(c.passed());
}

}  // TEST_SUITE
