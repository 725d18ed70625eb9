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

#include "witt/presentations.hpp"

#include <map>
#include <mutex>
#include <nlohmann/json.hpp>

#include "witt/algebra.hpp"
#include "witt/parse.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

namespace {

std::shared_ptr<const MultiPolyRing> as_multi(const RingPtr& r) {
  return std::static_pointer_cast<const MultiPolyRing>(r);
}

void check_base(const MultiPolyRing& src, const WittContext& ctx) {
  if (!src.base()->same_as(*ctx.base())) {
    fail(ErrorCode::ContextMismatch, src.name() + " is not a polynomial ring over " + ctx.base()->name());
  }
}

// Value and delta of an element of the delta operator ring.
struct Jet {
  Value v;
  Value d;
};

class DeltaLaws {
 public:
  DeltaLaws(const MultiPolyRing& ring, const WittContext& ctx) : R_(ring), ctx_(ctx), pi_(ring.embed(ctx.pi())) {}

  Value delta(const Value& g) const {
    const auto terms = poly_terms(g);
    std::vector<Jet> jets;
    for (const auto& t : terms) jets.push_back(term(t));
    if (jets.empty()) return R_.zero();
    return fold(jets, 0, jets.size(), true).d;
  }

 private:
  Value div_pi(const Value& a) const {
    auto d = R_.exact_div(a, pi_);
    if (!d) fail(ErrorCode::InternalIntegrityError, "delta law produced a non-integral value");
    return *d;
  }

  Jet sum(const Jet& a, const Jet& b) const {
    const std::uint64_t q = ctx_.q();
    const Value c = div_pi(R_.sub(R_.add(R_.pow(a.v, q), R_.pow(b.v, q)), R_.pow(R_.add(a.v, b.v), q)));
    return {R_.add(a.v, b.v), R_.add(R_.add(a.d, b.d), c)};
  }

  Jet product(const Jet& a, const Jet& b) const {
    const std::uint64_t q = ctx_.q();
    Value d = R_.add(R_.mul(a.d, R_.pow(b.v, q)), R_.mul(R_.pow(a.v, q), b.d));
    d = R_.add(d, R_.mul(pi_, R_.mul(a.d, b.d)));
    return {R_.mul(a.v, b.v), d};
  }

  Jet fold(const std::vector<Jet>& xs, std::size_t lo, std::size_t hi, bool additive) const {
    if (hi - lo == 1) return xs[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    const Jet a = fold(xs, lo, mid, additive), b = fold(xs, mid, hi, additive);
    return additive ? sum(a, b) : product(a, b);
  }

  Jet constant(const Value& c) const {
    const Ring& B = *ctx_.base();
    auto d = B.exact_div(B.sub(c, B.pow(c, ctx_.q())), ctx_.pi());
    if (!d) fail(ErrorCode::InternalIntegrityError, "r - r^q not divisible by pi");
    return {R_.embed(c), R_.embed(*d)};
  }

  Jet term(const PolyTerm& t) const {
    std::vector<Jet> factors{constant(t.coeff)};
    const std::size_t n = ctx_.n();
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      if (!t.exponents[k]) continue;
      const std::size_t i = k % (n + 1);
      if (i == n) fail(ErrorCode::InternalIntegrityError, "delta of a top-degree operator variable");
      const Jet x{R_.variable(k), R_.variable(k + 1)};
      for (Exponent e = 0; e < t.exponents[k]; ++e) factors.push_back(x);
    }
    return fold(factors, 0, factors.size(), false);
  }

  const MultiPolyRing& R_;
  const WittContext& ctx_;
  Value pi_;
};

}  // namespace

std::string_view style_name(PresentationStyle s) { return s == PresentationStyle::Theta ? "theta" : "delta"; }

PresentationStyle parse_style(std::string_view s) {
  if (s == "theta") return PresentationStyle::Theta;
  if (s == "delta") return PresentationStyle::Delta;
  fail(ErrorCode::ParseError, "unknown presentation style '" + std::string(s) + "'");
}

RingPresentation make_presentation(const RingPtr& base, const std::vector<std::string>& variables,
                                   const std::vector<std::string>& relations) {
  if (variables.empty()) fail(ErrorCode::ParseError, "a presentation needs at least one variable");
  RingPresentation p{as_multi(multi(base, variables)), {}};
  for (const auto& r : relations) p.relations.push_back(parse_element(p.ring, r).value());
  return p;
}

std::shared_ptr<const MultiPolyRing> operator_ring(const MultiPolyRing& src, std::size_t n, PresentationStyle style) {
  std::vector<std::string> names;
  for (const auto& x : src.var_names()) {
    for (std::size_t i = 0; i <= n; ++i) names.push_back(std::string(style_name(style)) + std::to_string(i) + "(" + x + ")");
  }
  return as_multi(multi(src.base(), names));
}

std::vector<Value> theta_expand(const MultiPolyRing& src, const Value& f, const WittContext& ctx) {
  check_base(src, ctx);
  const std::size_t n = ctx.n();
  auto S = operator_ring(src, n, PresentationStyle::Theta);
  auto alg = AlgebraStructure::make(ctx.base(), S);
  std::vector<std::vector<Value>> gh(n + 1);
  for (std::size_t j = 0; j < src.nvars(); ++j) {
    std::vector<Value> comps;
    for (std::size_t i = 0; i <= n; ++i) comps.push_back(S->variable(j * (n + 1) + i));
    auto g = ghost(WittVector(ctx, alg, comps));
    for (std::size_t k = 0; k <= n; ++k) gh[k].push_back(g.entries()[k]);
  }
  std::vector<Value> entries;
  for (std::size_t k = 0; k <= n; ++k) entries.push_back(evaluate(src, f, *alg, gh[k]));
  try {
    return unghost(GhostVector(ctx, alg, std::move(entries))).components();
  } catch (const Error& e) {
    fail(ErrorCode::InternalIntegrityError, std::string("theta expansion: ") + e.what());
  }
}

std::vector<Value> delta_expand(const MultiPolyRing& src, const Value& f, const WittContext& ctx) {
  check_base(src, ctx);
  const std::size_t n = ctx.n();
  auto D = operator_ring(src, n, PresentationStyle::Delta);
  auto alg = AlgebraStructure::make(ctx.base(), D);
  std::vector<Value> images;
  for (std::size_t j = 0; j < src.nvars(); ++j) images.push_back(D->variable(j * (n + 1)));
  std::vector<Value> out{evaluate(src, f, *alg, images)};
  DeltaLaws laws(*D, ctx);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(laws.delta(out.back()));
  return out;
}

std::shared_ptr<const CoordChange> coord_change(const WittContext& ctx) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const CoordChange>> memo;
  const std::string key = ctx.key() + "|" + std::to_string(ctx.n());
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const std::size_t n = ctx.n();
  std::vector<std::string> tn, dn;
  for (std::size_t i = 0; i <= n; ++i) {
    tn.push_back("theta" + std::to_string(i));
    dn.push_back("delta" + std::to_string(i));
  }
  auto c = std::make_shared<CoordChange>(CoordChange{ctx, as_multi(multi(ctx.base(), tn)),
                                                     as_multi(multi(ctx.base(), dn)), {}, {}});
  const MultiPolyRing& T = *c->theta_ring;
  const MultiPolyRing& D = *c->delta_ring;
  auto algT = AlgebraStructure::make(ctx.base(), c->theta_ring);
  auto algD = AlgebraStructure::make(ctx.base(), c->delta_ring);
  const Value pi = T.embed(ctx.pi());

  // Ghost entries of delta^i(X) satisfy e'_k = (e_{k+1} - e_k^q) / pi; delta^i is e_0.
  std::vector<Value> vars;
  for (std::size_t i = 0; i <= n; ++i) vars.push_back(T.variable(i));
  std::vector<Value> e = ghost(WittVector(ctx, algT, vars)).entries();
  c->delta_of_theta.push_back(e[0]);
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Value> next;
    for (std::size_t k = 0; k + 1 < e.size(); ++k) {
      auto d = T.exact_div(T.sub(e[k + 1], T.pow(e[k], ctx.q())), pi);
      if (!d) fail(ErrorCode::InternalIntegrityError, "delta coordinates are not integral");
      next.push_back(std::move(*d));
    }
    e = std::move(next);
    c->delta_of_theta.push_back(e[0]);
  }

  // Back-substitution: delta^i = theta_i + (terms in theta_0..theta_{i-1}).
  for (std::size_t i = 0; i <= n; ++i) {
    const Value rest = T.sub(c->delta_of_theta[i], T.variable(i));
    std::vector<Value> lower = vars;
    for (std::size_t m = i; m <= n; ++m) lower[m] = T.zero();
    if (!T.equal(evaluate(T, rest, *algT, lower), rest)) {
      fail(ErrorCode::InternalIntegrityError, "coordinate change is not unitriangular at index " + std::to_string(i));
    }
    std::vector<Value> images = c->theta_of_delta;
    images.resize(n + 1, D.zero());
    c->theta_of_delta.push_back(D.sub(D.variable(i), evaluate(T, rest, *algD, images)));
  }
  std::lock_guard lock(mu);
  return memo.emplace(key, c).first->second;
}

std::vector<Value> delta_to_theta(const MultiPolyRing& src, const std::vector<Value>& delta_polys,
                                  const WittContext& ctx) {
  const std::size_t n = ctx.n();
  auto change = coord_change(ctx);
  auto D = operator_ring(src, n, PresentationStyle::Delta);
  auto S = operator_ring(src, n, PresentationStyle::Theta);
  auto alg = AlgebraStructure::make(ctx.base(), S);
  std::vector<Value> images;
  for (std::size_t j = 0; j < src.nvars(); ++j) {
    std::vector<Value> thetas;
    for (std::size_t i = 0; i <= n; ++i) thetas.push_back(S->variable(j * (n + 1) + i));
    for (std::size_t i = 0; i <= n; ++i) {
      images.push_back(evaluate(*change->theta_ring, change->delta_of_theta[i], *alg, thetas));
    }
  }
  std::vector<Value> out;
  for (const auto& p : delta_polys) out.push_back(evaluate(*D, p, *alg, images));
  return out;
}

std::vector<Value> theta_vector_to_delta(const MultiPolyRing& src, const std::vector<Value>& theta_polys,
                                         const WittContext& ctx) {
  auto change = coord_change(ctx);
  auto S = operator_ring(src, ctx.n(), PresentationStyle::Theta);
  auto alg = AlgebraStructure::make(ctx.base(), S);
  std::vector<Value> out;
  for (const auto& p : change->delta_of_theta) out.push_back(evaluate(*change->theta_ring, p, *alg, theta_polys));
  return out;
}

LambdaPresentation lambda_presentation(const RingPresentation& p, const WittContext& ctx, PresentationStyle style) {
  auto ring = operator_ring(*p.ring, ctx.n(), style);
  LambdaPresentation out{style, ctx, ring, ring->var_names(), {}};
  for (const auto& f : p.relations) {
    auto polys = style == PresentationStyle::Theta ? theta_expand(*p.ring, f, ctx) : delta_expand(*p.ring, f, ctx);
    out.relations.insert(out.relations.end(), polys.begin(), polys.end());
  }
  return out;
}

std::string LambdaPresentation::to_text() const {
  std::string s = "Lambda_n presentation (" + std::string(style_name(style)) + ") over " + ctx.describe() + "\n";
  s += "generators:";
  for (const auto& g : generators) s += " " + g;
  s += "\nrelations:";
  if (relations.empty()) s += " (none)";
  s += "\n";
  for (const auto& r : relations) s += "  " + ring->format(r) + "\n";
  return s;
}

std::string LambdaPresentation::to_json(int indent) const {
  nlohmann::ordered_json j;
  j["context"] = ctx.describe();
  j["style"] = std::string(style_name(style));
  j["generators"] = generators;
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : relations) j["relations"].push_back(ring->format(r));
  return j.dump(indent);
}

Report verify_wn_presentation(const RingPtr& r0, const Value& pi, std::size_t n) {
  auto ctx = WittContext::make(r0, pi, n);
  auto alg = AlgebraStructure::identity(r0);
  Claim c{"presentation.wn_relations[" + r0->name() + ",pi=" + r0->format(pi) + ",n=" + std::to_string(n) + "]",
          "W_n(R) = R[x_1..x_n]/(x_i x_j - pi^i x_j | 1 <= i <= j <= n), x_i = V_pi^i(1)"};
  std::vector<WittVector> x{one_vector(ctx, alg)};
  for (std::size_t i = 1; i <= n; ++i) x.push_back(verschiebung(one_vector(ctx.with_length(n - i), alg), i));
  for (std::size_t i = 1; i <= n; ++i) {
    const auto s = scalar(r0->pow(pi, i), ctx, alg);
    for (std::size_t j = i; j <= n; ++j) {
      const auto lhs = mul(x[i], x[j]);
      const auto rhs = mul(s, x[j]);
      c.check(lhs == rhs, "x" + std::to_string(i) + "*x" + std::to_string(j) + " = " + lhs.to_string() + " but pi^" +
                              std::to_string(i) + "*x" + std::to_string(j) + " = " + rhs.to_string());
    }
  }
  return {c};
}

}  // namespace witt
