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

#include "witt/descent.hpp"

#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "witt/rings.hpp"

namespace witt {

namespace {

std::string tag(const AlgebraStructure& alg, const WittContext& ctx) {
  return "[" + alg.target()->name() + ",pi=" + ctx.base()->format(ctx.pi()) + ",n=" + std::to_string(ctx.n()) + "]";
}

const std::vector<Value>& elements_of(const AlgebraStructure& alg) {
  thread_local std::unordered_map<std::string, std::vector<Value>> memo;
  const std::string key = alg.target()->name();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  auto els = alg.target()->elements();
  if (!els) fail(ErrorCode::Unsupported, alg.target()->name() + " is not a finite ring");
  return memo.emplace(key, std::move(*els)).first->second;
}

// Calls f(x, y) on all pairs, or on `max_pairs` seeded samples when there are more.
template <class T, class F>
void for_pairs(const std::vector<T>& xs, const std::vector<T>& ys, const EnumerationLimits& lim, F&& f) {
  const std::uint64_t total = static_cast<std::uint64_t>(xs.size()) * ys.size();
  if (lim.max_pairs == 0 || total <= lim.max_pairs) {
    for (const auto& x : xs) {
      for (const auto& y : ys) f(x, y);
    }
    return;
  }
  std::mt19937_64 rng(lim.seed);
  std::uniform_int_distribution<std::size_t> dx(0, xs.size() - 1), dy(0, ys.size() - 1);
  for (std::uint64_t k = 0; k < lim.max_pairs; ++k) f(xs[dx(rng)], ys[dy(rng)]);
}

std::string alpha_key(const std::pair<WittVector, Value>& a) {
  return a.first.to_string() + "|" + a.first.ring()->format(a.second);
}

std::vector<WittVector> vectors_over(const WittContext& ctx, const AlgebraPtr& alg, const std::vector<Value>& pool) {
  std::vector<WittVector> out;
  const std::size_t len = ctx.n() + 1;
  std::vector<std::size_t> idx(len, 0);
  if (pool.empty()) return out;
  while (true) {
    std::vector<Value> comps;
    for (std::size_t k : idx) comps.push_back(pool[k]);
    out.emplace_back(ctx, alg, std::move(comps));
    std::size_t k = len;
    while (k > 0 && ++idx[k - 1] == pool.size()) idx[--k] = 0;
    if (k == 0) return out;
  }
}

std::vector<Value> principal_ideal(const AlgebraStructure& alg, const Value& g) {
  const Ring& A = *alg.target();
  std::vector<Value> out;
  std::unordered_set<std::string> seen;
  for (const auto& a : elements_of(alg)) {
    Value v = A.mul(g, a);
    if (seen.insert(A.format(v)).second) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::pair<WittVector, Value> alpha_map(const WittVector& w) {
  if (w.n() == 0) fail(ErrorCode::LengthZero, "alpha_n needs n >= 1");
  return {truncate(w, w.n() - 1), ghost_component(w, w.n(), false)};
}

std::vector<WittVector> enumerate_witt(const WittContext& ctx, const AlgebraPtr& alg) {
  return vectors_over(ctx, alg, elements_of(*alg));
}

Report kernel_report(const AlgebraPtr& alg, const WittContext& ctx) {
  const Ring& A = *alg->target();
  const std::size_t n = ctx.n();
  const Value pin = A.pow(alg->map(ctx.pi()), n);
  Claim shape{"descent.kernel_shape" + tag(*alg, ctx), "ker(alpha_n) = I_n(A) = {(0,...,0,a) : pi^n a = 0}"};
  Claim square{"descent.kernel_square_zero" + tag(*alg, ctx), "I_n(A) is a square-zero ideal"};
  std::vector<WittVector> kernel;
  for (const auto& w : enumerate_witt(ctx, alg)) {
    auto [t, g] = alpha_map(w);
    const bool in_kernel = t.is_zero() && A.is_zero(g);
    bool in_i = A.is_zero(A.mul(pin, w.components().back()));
    for (std::size_t k = 0; k < n; ++k) in_i = in_i && A.is_zero(w.components()[k]);
    shape.check(in_kernel == in_i, w.to_string() + (in_kernel ? " in ker, not in I_n" : " in I_n, not in ker"));
    if (in_kernel) kernel.push_back(w);
  }
  for (const auto& x : kernel) {
    for (const auto& y : kernel) {
      const auto xy = mul(x, y);
      square.check(xy.is_zero(), x.to_string() + "*" + y.to_string() + " = " + xy.to_string());
    }
  }
  return {shape, square};
}

Report equalizer_report(const AlgebraPtr& alg, const WittContext& ctx) {
  const Ring& A = *alg->target();
  const std::size_t n = ctx.n();
  if (n == 0) fail(ErrorCode::LengthZero, "alpha_n needs n >= 1");
  std::unordered_set<std::string> image;
  for (const auto& w : enumerate_witt(ctx, alg)) image.insert(alpha_key(alpha_map(w)));
  Claim c{"descent.equalizer" + tag(*alg, ctx), "im(alpha_n) = equalizer of rgh_n o pr_1 and pr_2 mod pi^n"};
  for (const auto& a : enumerate_witt(ctx.with_length(n - 1), alg)) {
    const Value lhs = ghost_component(a, n, true);
    for (const auto& b : elements_of(*alg)) {
      const bool eq = A.equal(lhs, reduce_mod_power(b, ctx.pi(), n, *alg));
      const bool in_image = image.count(a.to_string() + "|" + A.format(b)) > 0;
      c.check(eq == in_image, "(" + a.to_string() + ", " + A.format(b) + ")" +
                                  (eq ? " in equalizer, not in image" : " in image, not in equalizer"));
    }
  }
  return {c};
}

Report v_sequence_report(const AlgebraPtr& alg, const WittContext& ctx, std::size_t j, const EnumerationLimits& lim) {
  const std::size_t n = ctx.n();
  const std::string t = tag(*alg, ctx) + "[j=" + std::to_string(j) + "]";
  Claim inj{"descent.v_injective" + t, "V^j : W_n(A) -> W_{n+j}(A) is injective"};
  Claim exact{"descent.v_exact" + t, "ker(W_{n+j}(A) -> W_{j-1}(A)) = im(V^j)"};
  Claim surj{"descent.truncation_surjective" + t, "W_{n+j}(A) -> W_{j-1}(A) is surjective"};
  Claim graded{"descent.graded_pieces" + t, "gr^i_V W(A) = ker(W_i(A) -> W_{i-1}(A)) has |A| elements"};
  Claim additive{"descent.v_additive" + t, "V^j(x + y) = V^j(x) + V^j(y)"};

  const auto small = enumerate_witt(ctx, alg);
  std::unordered_set<std::string> image;
  for (const auto& w : small) {
    const auto v = verschiebung(w, j);
    inj.check(image.insert(v.to_string()).second, w.to_string() + " collides under V^j");
  }
  std::unordered_set<std::string> truncations;
  for (const auto& w : enumerate_witt(ctx.with_length(n + j), alg)) {
    const bool in_kernel = j == 0 || truncate(w, j - 1).is_zero();
    const bool in_image = image.count(w.to_string()) > 0;
    exact.check(in_kernel == in_image, w.to_string());
    if (j > 0) truncations.insert(truncate(w, j - 1).to_string());
  }
  if (j > 0) {
    for (const auto& w : enumerate_witt(ctx.with_length(j - 1), alg)) {
      surj.check(truncations.count(w.to_string()) > 0, w.to_string() + " not hit");
    }
  }
  const std::size_t order = elements_of(*alg).size();
  for (std::size_t i = 1; i <= n + j; ++i) {
    std::size_t count = 0;
    for (const auto& w : enumerate_witt(ctx.with_length(i), alg)) count += truncate(w, i - 1).is_zero();
    graded.check(count == order, "|gr^" + std::to_string(i) + "| = " + std::to_string(count));
  }
  for_pairs(small, small, lim, [&](const WittVector& x, const WittVector& y) {
    const auto lhs = verschiebung(add(x, y), j);
    const auto rhs = add(verschiebung(x, j), verschiebung(y, j));
    additive.check(lhs == rhs, x.to_string() + ", " + y.to_string());
  });
  Report r{inj, exact};
  if (j > 0) r.push_back(surj);
  r.push_back(graded);
  r.push_back(additive);
  return r;
}

Report ghost_congruence_report(const AlgebraPtr& alg, const WittContext& ctx) {
  const Ring& A = *alg->target();
  Claim c{"descent.ghost_congruence" + tag(*alg, ctx), "gh_i(x) = x_0^{q^i} mod pi A"};
  for (const auto& w : enumerate_witt(ctx, alg)) {
    for (std::size_t i = 0; i <= ctx.n(); ++i) {
      const Value d = A.sub(ghost_component(w, i), A.pow(w.components()[0], ctx.q_power(i)));
      c.check(A.is_zero(reduce_mod_power(d, ctx.pi(), 1, *alg)), w.to_string() + " i=" + std::to_string(i));
    }
  }
  return {c};
}

Report alpha_homomorphism_report(const AlgebraPtr& alg, const WittContext& ctx, const EnumerationLimits& lim) {
  const Ring& A = *alg->target();
  Claim c{"descent.alpha_homomorphism" + tag(*alg, ctx), "alpha_n : W_n(A) -> W_{n-1}(A) x A is a ring map"};
  const auto one = alpha_map(one_vector(ctx, alg));
  c.check(one.first == one_vector(ctx.with_length(ctx.n() - 1), alg) && A.equal(one.second, A.one()), "alpha(1)");
  const auto els = enumerate_witt(ctx, alg);
  for_pairs(els, els, lim, [&](const WittVector& x, const WittVector& y) {
    const auto ax = alpha_map(x), ay = alpha_map(y);
    const auto s = alpha_map(add(x, y));
    const auto p = alpha_map(mul(x, y));
    const bool ok = s.first == add(ax.first, ay.first) && A.equal(s.second, A.add(ax.second, ay.second)) &&
                    p.first == mul(ax.first, ay.first) && A.equal(p.second, A.mul(ax.second, ay.second));
    c.check(ok, x.to_string() + ", " + y.to_string());
  });
  return {c};
}

Report ideal_product_report(const AlgebraPtr& alg, const WittContext& ctx, const Value& g, const Value& h) {
  const Ring& A = *alg->target();
  const auto I = principal_ideal(*alg, g), J = principal_ideal(*alg, h), IJ = principal_ideal(*alg, A.mul(g, h));
  std::unordered_set<std::string> ij;
  for (const auto& v : IJ) ij.insert(A.format(v));
  Claim c{"descent.ideal_product" + tag(*alg, ctx) + "[I=(" + A.format(g) + "),J=(" + A.format(h) + ")]",
          "W_n(I) W_n(J) is contained in W_n(IJ)"};
  const auto wi = vectors_over(ctx, alg, I), wj = vectors_over(ctx, alg, J);
  for (const auto& x : wi) {
    for (const auto& y : wj) {
      const auto xy = mul(x, y);
      bool ok = true;
      for (const auto& comp : xy.components()) ok = ok && ij.count(A.format(comp)) > 0;
      c.check(ok, x.to_string() + "*" + y.to_string() + " = " + xy.to_string());
    }
  }
  return {c};
}

Report nilpotent_ideal_report(const AlgebraPtr& alg, const WittContext& ctx, const Value& g, std::size_t m) {
  const Ring& A = *alg->target();
  Claim c{"descent.nilpotent_ideal" + tag(*alg, ctx) + "[I=(" + A.format(g) + "),m=" + std::to_string(m) + "]",
          "I^m = 0 implies W_n(I)^m = 0"};
  c.check(A.is_zero(A.pow(g, m)), "I^m != 0 for I = (" + A.format(g) + ")");
  const auto wi = vectors_over(ctx, alg, principal_ideal(*alg, g));
  std::vector<WittVector> prods = wi;
  for (std::size_t k = 1; k < m; ++k) {
    std::unordered_set<std::string> seen;
    std::vector<WittVector> next;
    for (const auto& p : prods) {
      for (const auto& x : wi) {
        auto px = mul(p, x);
        if (seen.insert(px.to_string()).second) next.push_back(std::move(px));
      }
    }
    prods = std::move(next);
  }
  for (const auto& p : prods) c.check(p.is_zero(), p.to_string() + " is a nonzero " + std::to_string(m) + "-fold product");
  return {c};
}

Report alpha_injective_report(const WittContext& ctx, int bound) {
  const RingPtr& B = ctx.base();
  auto alg = AlgebraStructure::identity(B);
  std::vector<Value> pool;
  if (B->kind() == RingKind::Integers) {
    for (int v = -bound; v <= bound; ++v) pool.push_back(B->from_integer(v));
  } else {
    const auto p = static_cast<const UnivariatePolyRing&>(*B).prime();
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) pool.push_back(FpPoly(p, {a, b}));
    }
  }
  Claim c{"descent.alpha_injective" + tag(*alg, ctx), "alpha_n is injective when A is pi-torsion-free"};
  std::unordered_map<std::string, std::string> seen;
  for (const auto& w : vectors_over(ctx, alg, pool)) {
    auto [it, fresh] = seen.emplace(alpha_key(alpha_map(w)), w.to_string());
    c.check(fresh, w.to_string() + " and " + it->second + " have the same image");
  }
  return {c};
}

FiniteMap induced_map(const AlgebraPtr& source, const AlgebraPtr& target, std::vector<Value> images) {
  if (!source->base()->same_as(*target->base())) {
    fail(ErrorCode::ContextMismatch, "maps must be between algebras over the same base");
  }
  const auto gens = source->target()->variables();
  if (images.empty()) {
    for (const auto& g : gens) images.push_back(target->target()->generator(g).value_or(target->target()->zero()));
  }
  if (images.size() != gens.size()) fail(ErrorCode::IndexOutOfRange, "one image per generator is required");
  RingPtr S = source->target(), D = target->target();
  auto apply = [S, D, images](const Value& a) {
    auto terms = S->integer_terms(a);
    if (!terms) fail(ErrorCode::Unsupported, "cannot decompose elements of " + S->name());
    Value acc = D->zero();
    for (const auto& t : *terms) {
      Value m = D->from_integer(t.coeff);
      for (std::size_t k = 0; k < t.exponents.size(); ++k) {
        if (t.exponents[k]) m = D->mul(m, D->pow(images[k], t.exponents[k]));
      }
      acc = D->add(acc, m);
    }
    return acc;
  };
  return FiniteMap{source, target, apply, S->name() + " -> " + D->name()};
}

Report surjectivity_report(const FiniteMap& phi, const WittContext& ctx, const EnumerationLimits& lim) {
  const Ring& D = *phi.target->target();
  std::unordered_set<std::string> hit;
  for (const auto& a : elements_of(*phi.source)) hit.insert(D.format(phi.apply(a)));
  for (const auto& b : elements_of(*phi.target)) {
    if (!hit.count(D.format(b))) fail(ErrorCode::NotSurjective, phi.name + " misses " + D.format(b));
  }
  const std::string t = "[" + phi.name + ",pi=" + ctx.base()->format(ctx.pi()) + ",n=" + std::to_string(ctx.n()) + "]";
  Claim surj{"descent.wn_surjective" + t, "phi surjective implies W_n(phi) surjective"};
  Claim hom{"descent.wn_functorial" + t, "W_n(phi) is a ring map"};
  auto wphi = [&](const WittVector& w) {
    std::vector<Value> comps;
    for (const auto& c : w.components()) comps.push_back(phi.apply(c));
    return WittVector(ctx, phi.target, std::move(comps));
  };
  const auto src = enumerate_witt(ctx, phi.source);
  std::unordered_set<std::string> image;
  for (const auto& w : src) image.insert(wphi(w).to_string());
  for (const auto& w : enumerate_witt(ctx, phi.target)) surj.check(image.count(w.to_string()) > 0, w.to_string());
  for_pairs(src, src, lim, [&](const WittVector& x, const WittVector& y) {
    const bool ok = wphi(add(x, y)) == add(wphi(x), wphi(y)) && wphi(mul(x, y)) == mul(wphi(x), wphi(y));
    hom.check(ok, x.to_string() + ", " + y.to_string());
  });
  return {surj, hom};
}

std::vector<FiniteCase> standard_finite_battery() {
  const RingPtr Z = integers();
  const RingPtr F2t = univariate(2);
  const RingPtr dual = quotient(F2t, FpPoly(2, {0, 0, 1}));
  auto zcase = [&](const RingPtr& A, int p) {
    return FiniteCase{AlgebraStructure::make(Z, A), WittContext::make(Z, Z->from_integer(p), 0)};
  };
  return {
      zcase(integers_mod(4), 2),
      zcase(integers_mod(8), 2),
      zcase(integers_mod(9), 3),
      zcase(prime_field(2), 2),
      zcase(prime_field(3), 3),
      zcase(dual, 2),
      FiniteCase{AlgebraStructure::make(F2t, dual), WittContext::make(F2t, FpPoly(2, {0, 1}), 0)},
  };
}

}  // namespace witt
