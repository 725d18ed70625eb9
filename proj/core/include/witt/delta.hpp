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

#ifndef WITT_DELTA_HPP
#define WITT_DELTA_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "witt/multi.hpp"
#include "witt/report.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

// A free R0-algebra A = R0[x_1..x_r] (optionally modulo one relation) with a
// family of endomorphisms psi_alpha, one per prime of the family, given by the
// images of the generators. On R0 itself every psi_alpha is the identity.
class FrobeniusLiftSpec {
 public:
  struct Lift {
    Value prime;
    std::vector<Value> images;  // one per generator, elements of A
  };

  static FrobeniusLiftSpec make(RingPtr base, std::vector<std::string> generators, std::vector<Lift> lifts,
                                std::vector<Value> relations = {});
  // {"base": "Z", "primes": ["2"], "generators": ["x"],
  //  "psi": {"2": {"x": "x^2 + 2"}}, "relations": []}
  static FrobeniusLiftSpec from_json(std::string_view text);

  const RingPtr& base() const { return base_; }
  const PrimeFamily& family() const { return family_; }
  const std::vector<std::string>& generators() const { return generators_; }
  // A; equal to R0 when there are no generators.
  const RingPtr& ring() const { return ring_; }
  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Value>& relations() const { return relations_; }
  const std::vector<Value>& images(std::size_t alpha) const { return images_.at(alpha); }

  Value psi(std::size_t alpha, const Value& a) const;
  // Composite of psi_alpha^{m_alpha} in family order.
  Value psi(const MultiIndex& m, const Value& a) const;
  // The same spec over A[extra...] with psi_alpha(v) = v^{q_alpha} on the new variables.
  FrobeniusLiftSpec extended(const std::vector<std::string>& extra) const;
  // Image in the extended ring of an element of A.
  Value embed_into(const FrobeniusLiftSpec& extended, const Value& a) const;
  std::string to_string() const;

 private:
  RingPtr base_;
  PrimeFamily family_;
  std::vector<std::string> generators_;
  RingPtr ring_;
  AlgebraPtr alg_;
  std::vector<std::vector<Value>> images_;
  std::vector<Value> relations_;
};

struct LiftCheck {
  bool ok = true;
  std::string diagnostic;  // first failing generator or pair
};

// Relations respected, lifts commute, psi_alpha(x) = x^{q_alpha} mod pi_alpha.
// UnsupportedPresentation for more than one relation.
LiftCheck check_frobenius_lift(const FrobeniusLiftSpec& spec);

// (psi_alpha(a) - a^{q_alpha}) / pi_alpha; LiftViolation when inexact.
Value delta_apply(const FrobeniusLiftSpec& spec, std::size_t alpha, const Value& a);

struct CPolynomials {
  std::shared_ptr<const MultiPolyRing> ring;  // R0[x, y, z]
  std::vector<Value> c;                       // C_alpha(x, y), one per prime
  std::vector<std::string> binomial_form;     // -sum binom(q, i)/pi x^{q-i} y^i, rendered
  // C_{alpha, alpha'}(x, y, z) for alpha < alpha', keyed by the pair.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Value>> pair;

  const Value& c_pair(std::size_t alpha, std::size_t beta) const;
};

CPolynomials c_polynomials(const PrimeFamily& family);
// C_alpha(a, b) and C_{alpha,beta}(a, b, c) evaluated in A.
Value eval_c(const CPolynomials& c, std::size_t alpha, const AlgebraStructure& alg, const Value& a, const Value& b);
Value eval_c_pair(const CPolynomials& c, std::size_t alpha, std::size_t beta, const AlgebraStructure& alg,
                  const Value& a, const Value& y, const Value& z);

// Axioms for the constants, sums, products and (two primes) commutation,
// symbolically on generic low-degree inputs and on `samples` seeded samples.
Report check_delta_axioms(const FrobeniusLiftSpec& spec, std::size_t samples = 1000, std::uint64_t seed = 1);

// The unique vector whose ghost components are psi^k(a); LiftViolation if a
// division is inexact.
WittVector coaction(const FrobeniusLiftSpec& spec, std::size_t alpha, const Value& a, std::size_t n);
MultiWittVector coaction(const FrobeniusLiftSpec& spec, const Value& a, const MultiIndex& n);

// Random element of A with small coefficients and degree <= 2.
Value random_element(const FrobeniusLiftSpec& spec, std::mt19937_64& rng);

}  // namespace witt

#endif  // WITT_DELTA_HPP
