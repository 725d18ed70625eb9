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

#ifndef WITT_TOOLS_EXPR_HPP
#define WITT_TOOLS_EXPR_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "witt/witt_vector.hpp"

namespace witt::cli {

// Result of a Witt expression: a vector, a ghost vector (from `gh`) or a
// single element of A (from `gh_i`, `rgh_i`).
struct ExprValue {
  enum class Kind { Vector, Ghost, Element };
  Kind kind = Kind::Vector;
  std::optional<WittVector> vector;
  std::optional<GhostVector> ghost;
  Value element;
};

// Grammar, loosest binding first:
//   top    := ("gh" | "gh_" N | "rgh_" N)? sum
//   sum    := prod (("+" | "-") prod)*
//   prod   := unary ("*" unary)*
//   unary  := "-" unary | atom ("^" N)?
//   atom   := "(" a, b, ... ")"   Witt literal; a top-level comma is required,
//                                 so "(a,)" is the one-component vector
//           | "(" sum ")" | "<" a, b, ... ">" | "[" a "]"
//           | ("V" | "F") ("^" N)? atom | N
// Components are elements of A in the canonical element syntax. Scalars and
// Teichmueller vectors take the length of `ctx`; literals carry their own.
ExprValue evaluate_expression(std::string_view text, const WittContext& ctx, const AlgebraPtr& alg,
                              EvalPath path = EvalPath::Auto);

// Splits at commas outside brackets of any kind.
std::vector<std::string> split_top_level(std::string_view text);

}  // namespace witt::cli

#endif  // WITT_TOOLS_EXPR_HPP
