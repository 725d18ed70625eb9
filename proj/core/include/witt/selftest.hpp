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

#ifndef WITT_SELFTEST_HPP
#define WITT_SELFTEST_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "witt/report.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

enum class SuiteSize { Small, Medium };
// "small" or "medium"; ParseError otherwise.
SuiteSize parse_suite_size(std::string_view s);

// ring-axioms, ghost, verschiebung, frobenius, teichmuller, delta-axioms,
// descent, multi-prime, presentations, all.
const std::vector<std::string>& suite_names();

struct SelftestOptions {
  std::string suite = "all";
  SuiteSize size = SuiteSize::Small;
  std::uint64_t seed = 1;
  unsigned jobs = 0;  // 0: hardware concurrency
};

// ParseError for an unknown suite. Deterministic for a given seed; claims
// are sorted by id.
Report run_selftest(const SelftestOptions& opts);

// Random element with small coefficients: integers in [-bound, bound],
// uniform elements of finite rings, polynomials of degree <= 2.
Value random_value(const Ring& A, std::mt19937_64& rng, int bound = 5);
WittVector random_vector(const WittContext& ctx, const AlgebraPtr& alg, std::mt19937_64& rng, int bound = 5);

// FNV-1a; used to derive per-task seeds that do not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

}  // namespace witt

#endif  // WITT_SELFTEST_HPP
