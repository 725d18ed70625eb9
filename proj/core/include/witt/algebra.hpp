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

#ifndef WITT_ALGEBRA_HPP
#define WITT_ALGEBRA_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "witt/rings.hpp"

namespace witt {

class AlgebraStructure;
using AlgebraPtr = std::shared_ptr<const AlgebraStructure>;

// A torsion-free R0-algebra C with a surjective R0-algebra map onto A and a
// set-theoretic section. Witt arithmetic over A can be computed in C.
struct Cover {
  AlgebraPtr algebra;  // R0 -> C
  std::vector<std::string> generator_names;  // generators of A, in C order
};

// An R0-algebra A: the base R0 (Z or F_p[t]), the target ring and, for
// R0 = F_p[t], the image of t in A.
class AlgebraStructure : public std::enable_shared_from_this<AlgebraStructure> {
 public:
  // For R0 = F_p[t] the default image of t is A's generator of the same name,
  // or 0 when A is a prime field. Throws InvalidRing when A is not an
  // R0-algebra.
  static AlgebraPtr make(RingPtr base, RingPtr target, std::optional<Value> t_image = std::nullopt);
  // R0 as an algebra over itself.
  static AlgebraPtr identity(const RingPtr& base) { return make(base, base); }

  const RingPtr& base() const { return base_; }
  const RingPtr& target() const { return target_; }
  const std::optional<Value>& t_image() const { return t_image_; }

  // The structure map R0 -> A.
  Value map(const Value& r) const;
  RingElement map_element(const RingElement& r) const { return {target_, map(r.value())}; }

  // Multiplication by the image of pi is injective on A.
  bool torsion_free(const Value& pi) const;

  // Torsion-free cover of A, when A is presented by integer-coefficient
  // polynomials in its generators; nullptr otherwise.
  const Cover* cover() const;
  Value lift_to_cover(const Value& a) const;
  Value reduce_from_cover(const Value& c) const;

  std::string name() const;
  bool same_as(const AlgebraStructure& o) const;

 private:
  AlgebraStructure(RingPtr base, RingPtr target, std::optional<Value> t_image)
      : base_(std::move(base)), target_(std::move(target)), t_image_(std::move(t_image)) {}

  RingPtr base_;
  RingPtr target_;
  std::optional<Value> t_image_;

  mutable std::once_flag cover_once_;
  mutable std::unique_ptr<Cover> cover_;
  mutable std::vector<Value> cover_images_;  // images in A of C's generators
};

// |R0/(pi)|; NotPrimeElement unless pi is prime in R0.
Integer residue_cardinality(const RingPtr& r0, const Value& pi);
// (pi) is maximal with finite residue field.
bool is_prime_element(const RingPtr& r0, const Value& pi);
// Canonical representative of a modulo pi^k A.
Value reduce_mod_power(const Value& a, const Value& pi, std::uint64_t k, const AlgebraStructure& alg);

// Evaluates f, an element of the polynomial ring `src` over alg.base(), at
// `images` (one per variable of src) in alg.target().
Value evaluate(const MultiPolyRing& src, const Value& f, const AlgebraStructure& alg,
               const std::vector<Value>& images);

}  // namespace witt

#endif  // WITT_ALGEBRA_HPP
