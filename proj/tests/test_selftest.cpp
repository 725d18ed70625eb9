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

#include <random>
#include <set>

#include "helpers.hpp"
#include "witt/selftest.hpp"

using namespace witt;
using testing::error_of;

TEST_SUITE("selftest") {

TEST_CASE("options") {
  CHECK(parse_suite_size("small") == SuiteSize::Small);
  CHECK(parse_suite_size("medium") == SuiteSize::Medium);
  CHECK(error_of([] { parse_suite_size("large"); }) == ErrorCode::ParseError);
  CHECK(suite_names().size() == 10);
  CHECK(suite_names().back() == "all");
  SelftestOptions o;
  o.suite = "nope";
  CHECK(error_of([&] { run_selftest(o); }) == ErrorCode::ParseError);
}

TEST_CASE("seeds") {
  CHECK(derive_seed(7, "ghost") == derive_seed(7, "ghost"));
  CHECK(derive_seed(7, "ghost") != derive_seed(8, "ghost"));
  CHECK(derive_seed(7, "ghost") != derive_seed(7, "frobenius"));
  std::mt19937_64 r1(3), r2(3);
  const auto ctx = WittContext::make(integers(), Integer(2), 2);
  const auto Z = AlgebraStructure::identity(integers());
  CHECK(random_vector(ctx, Z, r1) == random_vector(ctx, Z, r2));
}

TEST_CASE("reports are sorted and independent of scheduling") {
  SelftestOptions o;
  o.suite = "teichmuller";
  o.seed = 11;
  o.jobs = 1;
  const auto a = run_selftest(o);
  o.jobs = 4;
  const auto b = run_selftest(o);
  CHECK(report_json(a) == report_json(b));
  CHECK(all_passed(a));
  std::set<std::string> ids;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k > 0) CHECK(a[k - 1].claim_id <= a[k].claim_id);
    ids.insert(a[k].claim_id);
  }
  CHECK(ids.size() == a.size());
}

}  // TEST_SUITE
