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

#ifndef WITT_WITT_VECTOR_HPP
#define WITT_WITT_VECTOR_HPP

#include <string>
#include <vector>

#include "witt/structural.hpp"

namespace witt {

// (x_0, ..., x_n)_pi with components in an R0-algebra A.
class WittVector {
 public:
  // IndexOutOfRange unless there are n + 1 components.
  WittVector(WittContext ctx, AlgebraPtr alg, std::vector<Value> components);

  const WittContext& context() const { return ctx_; }
  const AlgebraPtr& algebra() const { return alg_; }
  const RingPtr& ring() const { return alg_->target(); }
  std::size_t n() const { return ctx_.n(); }
  const std::vector<Value>& components() const { return comps_; }
  RingElement component(std::size_t i) const { return {alg_->target(), comps_.at(i)}; }

  bool is_zero() const;
  bool operator==(const WittVector& o) const;
  // "(x0,x1,...)"
  std::string to_string() const;

 private:
  WittContext ctx_;
  AlgebraPtr alg_;
  std::vector<Value> comps_;
};

// <w_0, ..., w_n>: ghost coordinates, same index set.
class GhostVector {
 public:
  GhostVector(WittContext ctx, AlgebraPtr alg, std::vector<Value> entries);

  const WittContext& context() const { return ctx_; }
  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Value>& entries() const { return entries_; }
  RingElement entry(std::size_t i) const { return {alg_->target(), entries_.at(i)}; }

  bool operator==(const GhostVector& o) const;
  std::string to_string() const;

 private:
  WittContext ctx_;
  AlgebraPtr alg_;
  std::vector<Value> entries_;
};

// How a ring operation is evaluated. Structural evaluates the universal
// polynomials and is always valid. Ghost computes in ghost coordinates and
// needs A torsion-free. Cover lifts to a torsion-free cover of A, works in
// ghost coordinates there and maps back. Auto picks Ghost, then Cover, then
// Structural.
enum class EvalPath { Auto, Structural, Ghost, Cover };

EvalPath resolve_path(const WittContext& ctx, const AlgebraStructure& alg, EvalPath path);

GhostVector ghost(const WittVector& w);
// CongruenceViolation when g is not in the ghost image; TorsionNotSupported
// when A is not torsion-free.
WittVector unghost(const GhostVector& g);

WittVector zero_vector(const WittContext& ctx, const AlgebraPtr& alg);
WittVector one_vector(const WittContext& ctx, const AlgebraPtr& alg);
// Image of r in R0 under the R0-algebra structure of W_n(A): ghost <r, ..., r>.
WittVector scalar(const Value& r, const WittContext& ctx, const AlgebraPtr& alg);
WittVector from_components(const WittContext& ctx, const AlgebraPtr& alg, const std::vector<RingElement>& xs);

WittVector add(const WittVector& a, const WittVector& b, EvalPath path = EvalPath::Auto);
WittVector sub(const WittVector& a, const WittVector& b, EvalPath path = EvalPath::Auto);
WittVector mul(const WittVector& a, const WittVector& b, EvalPath path = EvalPath::Auto);
WittVector negate(const WittVector& a, EvalPath path = EvalPath::Auto);
WittVector pow(const WittVector& a, std::uint64_t e, EvalPath path = EvalPath::Auto);
// psi: W_n -> W_{n-1}; LengthZero when n = 0.
WittVector frobenius(const WittVector& w, EvalPath path = EvalPath::Auto);

// [a] = (a, 0, ..., 0)
WittVector teichmuller(const Value& a, const WittContext& ctx, const AlgebraPtr& alg);
// Component i becomes a^{q^i} b_i.
WittVector teich_scale(const Value& a, const WittVector& w);
// V^j: W_n -> W_{n+j}, (y) -> (0, ..., 0, y).
WittVector verschiebung(const WittVector& w, std::size_t j = 1);
// First j + 1 components; IndexOutOfRange when j > n.
WittVector truncate(const WittVector& w, std::size_t j);
// gh_i(w), or with `reduced` the i-th reduced ghost component (any i) taken
// modulo pi^{n+1}.
Value ghost_component(const WittVector& w, std::size_t i, bool reduced = false);

// The same element written in coordinates for the uniformizer u*pi.
// NotAUnit unless u is a unit of R0.
WittVector rebase_uniformizer(const WittVector& w, const Value& u);

// Components that are evaluations of R0-polynomials, one per component:
// the structural polynomials applied to (a, b) or (a).
WittVector apply_structural(const StructuralPolynomialSet& s, const WittVector& a, const WittVector* b);

}  // namespace witt

#endif  // WITT_WITT_VECTOR_HPP
