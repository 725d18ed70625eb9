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

#ifndef WITT_DESCENT_HPP
#define WITT_DESCENT_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "witt/report.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

// alpha_n(w) = (w truncated to W_{n-1}, gh_n(w)); LengthZero when n = 0.
std::pair<WittVector, Value> alpha_map(const WittVector& w);

// Every element of W_n(A) for a finite A, in lexicographic component order.
std::vector<WittVector> enumerate_witt(const WittContext& ctx, const AlgebraPtr& alg);

// The checks below enumerate a finite algebra A; ctx fixes (R0, pi, n).
// Pairwise checks over more than `max_pairs` pairs use that many seeded samples;
// 0 means exhaustive.
struct EnumerationLimits {
  std::uint64_t max_pairs = 0;
  std::uint64_t seed = 1;
};

// ker(alpha_n) = {(0,...,0,a) : pi^n a = 0} and it squares to zero.
Report kernel_report(const AlgebraPtr& alg, const WittContext& ctx);
// im(alpha_n) is the set of pairs (a, b) with rgh_n(a) = b mod pi^n.
Report equalizer_report(const AlgebraPtr& alg, const WittContext& ctx);
// 0 -> W_n(A) -V^j-> W_{n+j}(A) -> W_{j-1}(A) -> 0 is exact, and each graded
// piece ker(W_i -> W_{i-1}) has |A| elements.
Report v_sequence_report(const AlgebraPtr& alg, const WittContext& ctx, std::size_t j,
                         const EnumerationLimits& limits = {});
// gh_i(w) = w_0^{q^i} mod pi for every w and i <= n.
Report ghost_congruence_report(const AlgebraPtr& alg, const WittContext& ctx);
// alpha_n is a ring homomorphism W_n(A) -> W_{n-1}(A) x A.
Report alpha_homomorphism_report(const AlgebraPtr& alg, const WittContext& ctx, const EnumerationLimits& limits = {});
// W_n(I) W_n(J) lies in W_n(IJ) for I = (g), J = (h); W_n(I) is the kernel of
// W_n(A) -> W_n(A/I).
Report ideal_product_report(const AlgebraPtr& alg, const WittContext& ctx, const Value& g, const Value& h);
// I^m = 0 implies W_n(I)^m = 0, for I = (g).
Report nilpotent_ideal_report(const AlgebraPtr& alg, const WittContext& ctx, const Value& g, std::size_t m);
// Over a torsion-free A: alpha_n is injective on the vectors with components
// in [-bound, bound].
Report alpha_injective_report(const WittContext& ctx, int bound);

// A map of R0-algebras between finite algebras.
struct FiniteMap {
  AlgebraPtr source;
  AlgebraPtr target;
  std::function<Value(const Value&)> apply;
  std::string name;
};
// The R0-algebra map sending each generator of the source to `images`
// (default: the target generator of the same name, else 0).
FiniteMap induced_map(const AlgebraPtr& source, const AlgebraPtr& target, std::vector<Value> images = {});
// W_n(phi) is surjective and a ring map; NotSurjective unless phi is.
Report surjectivity_report(const FiniteMap& phi, const WittContext& ctx, const EnumerationLimits& limits = {});

// The finite algebras and maps the selftest and acceptance batteries use.
struct FiniteCase {
  AlgebraPtr alg;
  WittContext ctx;  // n = 0; callers pick the length
};
std::vector<FiniteCase> standard_finite_battery();

}  // namespace witt

#endif  // WITT_DESCENT_HPP
