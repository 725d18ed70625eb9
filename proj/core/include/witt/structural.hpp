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

#ifndef WITT_STRUCTURAL_HPP
#define WITT_STRUCTURAL_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "witt/context.hpp"

namespace witt {

enum class WittOp { Sum, Product, Negation, Frobenius };

std::string_view witt_op_name(WittOp op);
// Accepts "sum", "product", "negation", "frobenius".
WittOp parse_witt_op(std::string_view s);

// Universal polynomials over R0 computing one ring operation on Witt
// coordinates. Binary operations use variables a0..an, b0..bn; unary ones
// a0..an. Frobenius yields n polynomials (W_n -> W_{n-1}), the others n + 1.
struct StructuralPolynomialSet {
  WittOp op;
  WittContext ctx;
  std::shared_ptr<const MultiPolyRing> ring;
  std::vector<Value> polys;

  std::size_t term_count() const;
};
using StructuralPtr = std::shared_ptr<const StructuralPolynomialSet>;

// Memoized per (op, R0, pi, n). InternalIntegrityError if a symbolic division
// fails. When WITT_CACHE_DIR is set, results are also stored there.
StructuralPtr structural_polys(const WittContext& ctx, WittOp op);

// Recomputes the ghost components of the polynomial list and compares them
// with the target ghost expression as symbolic identities.
bool ghost_compatible(const StructuralPolynomialSet& s);

// Target ghost polynomials gh_k(a) + gh_k(b) (resp. product, negation,
// shift) in the ring of `s`.
std::vector<Value> target_ghosts(const StructuralPolynomialSet& s);

// Polynomials y_k(x0..xn) over R0 with (x)_pi = (y)_{u pi}.
struct RebasePolys {
  WittContext source;
  WittContext target;
  std::shared_ptr<const MultiPolyRing> ring;
  std::vector<Value> polys;
};
std::shared_ptr<const RebasePolys> rebase_polys(const WittContext& ctx, const Value& u);

void clear_structural_cache();

}  // namespace witt

#endif  // WITT_STRUCTURAL_HPP
