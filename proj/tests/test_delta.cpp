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
#include "witt/delta.hpp"
#include "witt/multi.hpp"

using namespace witt;
using testing::el;
using testing::error_of;

namespace {

FrobeniusLiftSpec spec(const char* json) { return FrobeniusLiftSpec::from_json(json); }

}  // namespace

TEST_SUITE("delta_lambda") {

TEST_CASE("lift specs parse and validate") {
  const auto s = spec(R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 2"}}})");
  CHECK(s.generators() == std::vector<std::string>{"x"});
  CHECK(s.ring()->format(s.psi(0, el(s.ring(), "x + 1"))) == "x^2 + 3");
  CHECK(check_frobenius_lift(s).ok);
  CHECK(error_of([] { spec("{"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { spec(R"({"base":"Z","primes":["2"],"generators":["x"]})"); }) == ErrorCode::ParseError);
  CHECK(error_of([] { spec(R"({"base":"Z","primes":["4"]})"); }) == ErrorCode::NotPrimeElement);
  CHECK(error_of([] { spec(R"({"base":"Q","primes":["2"]})"); }) == ErrorCode::ParseError);
}

TEST_CASE("lift failures are diagnosed") {
  const auto bad = spec(R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 5"}}})");
  const auto lc = check_frobenius_lift(bad);
  CHECK_FALSE(lc.ok);
  CHECK(lc.diagnostic.find("x") != std::string::npos);
  CHECK(error_of([&] { delta_apply(bad, 0, el(bad.ring(), "x")); }) == ErrorCode::LiftViolation);
  CHECK(error_of([&] { coaction(bad, 0, el(bad.ring(), "x"), 1); }) == ErrorCode::LiftViolation);

  const auto noncommuting =
      spec(R"({"base":"Z","primes":["2","3"],"generators":["x"],"psi":{"2":{"x":"x^2 + 2"},"3":{"x":"x^3"}}})");
  CHECK_FALSE(check_frobenius_lift(noncommuting).ok);

  const auto with_rel = spec(
      R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2"}},"relations":["x^2 - 1"]})");
  CHECK(check_frobenius_lift(with_rel).ok);
  const auto breaks_rel = spec(
      R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 2"}},"relations":["x^2 - 1"]})");
  CHECK_FALSE(check_frobenius_lift(breaks_rel).ok);
  const auto two_rels = spec(
      R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2"}},"relations":["x^2 - 1","x^3 - x"]})");
  CHECK(error_of([&] { check_frobenius_lift(two_rels); }) == ErrorCode::UnsupportedPresentation);
}

TEST_CASE("delta on constants") {
  const auto s = spec(R"({"base":"Z","primes":["2","3"]})");
  CHECK(delta_apply(s, 0, Integer(2)) == Value(Integer(-1)));
  CHECK(delta_apply(s, 0, Integer(5)) == Value(Integer(-10)));
  CHECK(delta_apply(s, 1, Integer(2)) == Value(Integer(-2)));
  CHECK(delta_apply(s, 1, Integer(1)) == Value(Integer(0)));
  for (const auto& c : frozen::commutators()) {
    CAPTURE(c.a);
    const Value a = Integer(c.a);
    const Value d2 = delta_apply(s, 0, a), d3 = delta_apply(s, 1, a);
    CHECK(d2 == Value(Integer(c.delta2)));
    CHECK(d3 == Value(Integer(c.delta3)));
    const Integer lhs = delta_apply(s, 0, d3).integer() - delta_apply(s, 1, d2).integer();
    CHECK(lhs == c.commutator);
  }
}

TEST_CASE("function field lifts") {
  const auto s = spec(R"({"base":"Fp[t]:3","primes":["t"],"generators":["x"],"psi":{"t":{"x":"x^3 + t*x"}}})");
  CHECK(check_frobenius_lift(s).ok);
  CHECK(delta_apply(s, 0, el(s.ring(), "x")) == el(s.ring(), "x"));
  // psi = id on F_3[t] itself: delta(t) = (t - t^3)/t.
  CHECK(delta_apply(s, 0, el(s.ring(), "t")) == el(s.ring(), "1 - t^2"));
}

TEST_CASE("C polynomials match the oracle") {
  const auto fam = PrimeFamily::make(integers(), {Integer(2), Integer(3), Integer(5), Integer(7)});
  const auto cp = c_polynomials(fam);
  for (std::size_t a = 0; a < frozen::c_polys().size(); ++a) {
    CAPTURE(a);
    CHECK(cp.ring->format(cp.c[a]) == cp.ring->format(el(cp.ring, frozen::c_polys()[a].second)));
  }
  CHECK(cp.binomial_form.size() == 4);
  CHECK(cp.ring->format(cp.c_pair(0, 1)) == cp.ring->format(el(cp.ring, frozen::c_pair_2_3())));
  CHECK(cp.ring->format(cp.c_pair(1, 2)) == cp.ring->format(el(cp.ring, frozen::c_pair_3_5())));
  auto Z = AlgebraStructure::identity(integers());
  for (const auto& c : frozen::commutators()) {
    CHECK(eval_c_pair(cp, 0, 1, *Z, Integer(c.a), Integer(c.delta2), Integer(c.delta3)) ==
          Value(Integer(c.commutator)));
  }
  CHECK(eval_c(cp, 0, *Z, Integer(3), Integer(4)) == Value(Integer(-12)));
}

TEST_CASE("delta axioms on the lift battery") {
  for (const char* js :
       {R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 2"}}})",
        R"({"base":"Z","primes":["2","3"]})",
        R"({"base":"Z","primes":["2","3"],"generators":["x"],"psi":{"2":{"x":"x^2"},"3":{"x":"x^3"}}})",
        R"({"base":"Fp[t]:2","primes":["t"],"generators":["x","y"],"psi":{"t":{"x":"x^2 + t*y","y":"y^2"}}})"}) {
    CAPTURE(js);
    const Report r = check_delta_axioms(spec(js), 100, 5);
    CHECK(r.size() >= 4);
    for (const auto& c : r) {
      CAPTURE(c.claim_id);
      CHECK(c.passed());
      CHECK(c.universe_size > 0);
    }
  }
}

TEST_CASE("coactions") {
  const auto s = spec(R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 2"}}})");
  const auto w = coaction(s, 0, el(s.ring(), "x"), 2);
  CHECK(w.to_string() == "(x,1,x^2 + 1)");
  CHECK(ghost(w).to_string() == "<x,x^2 + 2,x^4 + 4*x^2 + 6>");

  const auto id = spec(R"({"base":"Z","primes":["2"]})");
  const auto c3 = coaction(id, 0, Integer(3), 3);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(ghost_component(c3, k) == Value(Integer(3)));
  CHECK(c3.to_string() == "(3,-3,-24,-1128)");

  const auto teich = spec(R"({"base":"Z","primes":["3"],"generators":["x"],"psi":{"3":{"x":"x^3"}}})");
  const auto ctx = WittContext::make(integers(), Integer(3), 3);
  CHECK(coaction(teich, 0, el(teich.ring(), "x"), 3) == teichmuller(el(teich.ring(), "x"), ctx, teich.algebra()));

  const auto two = spec(R"({"base":"Z","primes":["2","3"],"generators":["x"],"psi":{"2":{"x":"x^2"},"3":{"x":"x^3"}}})");
  const auto m = coaction(two, el(two.ring(), "x + 1"), {1, 1});
  const auto g = multi_ghost(m);
  CHECK(g.at({1, 1}) == el(two.ring(), "x^6 + 1"));
  CHECK(g.at({1, 0}) == el(two.ring(), "x^2 + 1"));
}

TEST_CASE("extended specs") {
  const auto s = spec(R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 2"}}})");
  const auto e = s.extended({"u"});
  CHECK(e.generators() == std::vector<std::string>{"x", "u"});
  CHECK(e.psi(0, el(e.ring(), "u")) == el(e.ring(), "u^2"));
  CHECK(e.psi(0, s.embed_into(e, el(s.ring(), "x"))) == el(e.ring(), "x^2 + 2"));
}

TEST_CASE("random elements are seeded") {
  const auto s = spec(R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2"}}})");
  std::mt19937_64 a(3), b(3);
  for (int k = 0; k < 10; ++k) CHECK(random_element(s, a) == random_element(s, b));
}

}  // TEST_SUITE
