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

#ifndef WITT_PRESENTATIONS_HPP
#define WITT_PRESENTATIONS_HPP

#include <memory>
#include <string>
#include <vector>

#include "witt/context.hpp"
#include "witt/report.hpp"
#include "witt/rings.hpp"

namespace witt {

enum class PresentationStyle { Theta, Delta };
std::string_view style_name(PresentationStyle s);
// "theta" or "delta".
PresentationStyle parse_style(std::string_view s);

// R0[x_1..x_r] / (f_1..f_s).
struct RingPresentation {
  std::shared_ptr<const MultiPolyRing> ring;
  std::vector<Value> relations;
};
// Parses "x,y" and relation strings over ctx.base().
RingPresentation make_presentation(const RingPtr& base, const std::vector<std::string>& variables,
                                   const std::vector<std::string>& relations);

// Polynomial ring R0[g_i(x_j)] with variables ordered by j, then i, named
// "theta2(x)" or "delta2(x)".
std::shared_ptr<const MultiPolyRing> operator_ring(const MultiPolyRing& src, std::size_t n, PresentationStyle style);

// theta_i(f) for i <= n: the Witt components of f evaluated at the generic
// vectors (theta_0(x_j), ..., theta_n(x_j)). Constants r embed as the scalar r.
std::vector<Value> theta_expand(const MultiPolyRing& src, const Value& f, const WittContext& ctx);
// delta^i(f) for i <= n, from the sum, product and constant laws.
std::vector<Value> delta_expand(const MultiPolyRing& src, const Value& f, const WittContext& ctx);

// The triangular change between the coordinates theta_0..theta_n and
// delta^0..delta^n of a single generic Witt vector.
struct CoordChange {
  WittContext ctx;
  std::shared_ptr<const MultiPolyRing> theta_ring;  // theta0..thetan
  std::shared_ptr<const MultiPolyRing> delta_ring;  // delta0..deltan
  std::vector<Value> delta_of_theta;
  std::vector<Value> theta_of_delta;
};
std::shared_ptr<const CoordChange> coord_change(const WittContext& ctx);

// Rewrites delta_expand(f) in theta coordinates (substituting delta^k(x_j)).
std::vector<Value> delta_to_theta(const MultiPolyRing& src, const std::vector<Value>& delta_polys,
                                  const WittContext& ctx);
// delta^i of the vector with theta coordinates `theta_polys` (the change applied
// to each component list), over the theta operator ring.
std::vector<Value> theta_vector_to_delta(const MultiPolyRing& src, const std::vector<Value>& theta_polys,
                                         const WittContext& ctx);

struct LambdaPresentation {
  PresentationStyle style;
  WittContext ctx;
  std::shared_ptr<const MultiPolyRing> ring;
  std::vector<std::string> generators;
  std::vector<Value> relations;  // (n+1) per input relation, grouped by relation

  std::string to_text() const;
  std::string to_json(int indent = 2) const;
};
LambdaPresentation lambda_presentation(const RingPresentation& p, const WittContext& ctx, PresentationStyle style);

// x_i = V^i(1) in W_n(R0) satisfy x_i x_j = pi^i x_j for 1 <= i <= j <= n.
Report verify_wn_presentation(const RingPtr& r0, const Value& pi, std::size_t n);

}  // namespace witt

#endif  // WITT_PRESENTATIONS_HPP
