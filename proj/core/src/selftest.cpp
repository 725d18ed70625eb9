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

#include "witt/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "witt/delta.hpp"
#include "witt/descent.hpp"
#include "witt/multi.hpp"
#include "witt/presentations.hpp"
#include "witt/rings.hpp"
#include "witt/structural.hpp"

namespace witt {

namespace {

using Task = std::function<Report()>;

struct Case {
  WittContext ctx;
  AlgebraPtr alg;
};

struct Budget {
  std::size_t samples;
  std::uint64_t max_pairs;
  bool medium;
};

Budget budget(SuiteSize s) {
  return s == SuiteSize::Small ? Budget{200, 2000, false} : Budget{1000, 20000, true};
}

std::string ctx_tag(const WittContext& ctx) {
  return ctx.base()->name() + ",pi=" + ctx.base()->format(ctx.pi()) + ",n=" + std::to_string(ctx.n());
}

std::string tag(const Case& c) { return "[" + ctx_tag(c.ctx) + "|" + c.alg->target()->name() + "]"; }

std::vector<WittContext> contexts(SuiteSize size) {
  const RingPtr Z = integers();
  const RingPtr F2t = univariate(2), F3t = univariate(3), F5t = univariate(5);
  const Value t2 = FpPoly(2, {0, 1}), t3 = FpPoly(3, {0, 1}), t5 = FpPoly(5, {0, 1});
  const Value quad = FpPoly(2, {1, 1, 1});
  if (size == SuiteSize::Small) {
    return {WittContext::make(Z, Integer(2), 2), WittContext::make(Z, Integer(3), 1),
            WittContext::make(F2t, t2, 2), WittContext::make(F3t, t3, 1), WittContext::make(F2t, quad, 1)};
  }
  return {WittContext::make(Z, Integer(2), 3),  WittContext::make(Z, Integer(3), 2),
          WittContext::make(Z, Integer(5), 1),  WittContext::make(F2t, t2, 3),
          WittContext::make(F3t, t3, 2),        WittContext::make(F2t, quad, 2),
          WittContext::make(F5t, t5, 1)};
}

std::vector<AlgebraPtr> algebras_for(const WittContext& ctx) {
  const RingPtr& B = ctx.base();
  if (B->kind() == RingKind::Integers) {
    return {AlgebraStructure::identity(B), AlgebraStructure::make(B, integers_mod(8)),
            AlgebraStructure::make(B, integers_mod(9)),
            AlgebraStructure::make(B, quotient(univariate(2), FpPoly(2, {0, 0, 1}))),
            AlgebraStructure::make(B, multi(B, {"x"}))};
  }
  const auto p = static_cast<const UnivariatePolyRing&>(*B).prime();
  return {AlgebraStructure::identity(B), AlgebraStructure::make(B, quotient(B, FpPoly(p, {0, 0, 1}))),
          AlgebraStructure::make(B, prime_field(p)), AlgebraStructure::make(B, multi(B, {"x"}))};
}

std::vector<Case> cases(SuiteSize size) {
  std::vector<Case> out;
  for (const auto& ctx : contexts(size)) {
    for (const auto& alg : algebras_for(ctx)) out.push_back({ctx, alg});
  }
  return out;
}

std::vector<EvalPath> available_paths(const Case& c) {
  std::vector<EvalPath> out{EvalPath::Structural};
  for (EvalPath p : {EvalPath::Ghost, EvalPath::Cover}) {
    try {
      resolve_path(c.ctx, *c.alg, p);
      out.push_back(p);
    } catch (const Error&) {
    }
  }
  return out;
}

std::string path_name(EvalPath p) {
  switch (p) {
    case EvalPath::Structural: return "structural";
    case EvalPath::Ghost: return "ghost";
    case EvalPath::Cover: return "cover";
    default: return "auto";
  }
}

void suffix_all(Report& r, const std::string& suffix) {
  for (auto& c : r) c.claim_id += suffix;
}

void append(Report& r, Report more) {
  for (auto& c : more) r.push_back(std::move(c));
}

// ---- ring axioms ------------------------------------------------------------

Report ring_axioms(const Case& c, const Budget& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Claim ax{"ring.axioms" + tag(c), "W_n(A) is a commutative ring"};
  Claim paths{"ring.eval_paths" + tag(c), "structural polynomials S_k, P_k, N_k agree with ghost arithmetic"};
  const auto zero = zero_vector(c.ctx, c.alg), one = one_vector(c.ctx, c.alg);
  const auto ps = available_paths(c);
  for (std::size_t k = 0; k < b.samples; ++k) {
    const auto x = random_vector(c.ctx, c.alg, rng), y = random_vector(c.ctx, c.alg, rng),
               z = random_vector(c.ctx, c.alg, rng);
    const std::string w = x.to_string() + ", " + y.to_string() + ", " + z.to_string();
    ax.check(add(add(x, y), z) == add(x, add(y, z)), "(x+y)+z " + w);
    ax.check(add(x, y) == add(y, x), "x+y " + w);
    ax.check(mul(mul(x, y), z) == mul(x, mul(y, z)), "(xy)z " + w);
    ax.check(mul(x, y) == mul(y, x), "xy " + w);
    ax.check(mul(x, add(y, z)) == add(mul(x, y), mul(x, z)), "x(y+z) " + w);
    ax.check(add(x, zero) == x && mul(x, one) == x, "identities " + w);
    ax.check(add(x, negate(x)).is_zero(), "x + (-x) " + w);
    const auto s = add(x, y, EvalPath::Structural), p = mul(x, y, EvalPath::Structural);
    const auto nx = negate(x, EvalPath::Structural);
    for (EvalPath path : ps) {
      if (path == EvalPath::Structural) continue;
      const bool ok = add(x, y, path) == s && mul(x, y, path) == p && negate(x, path) == nx;
      paths.check(ok, path_name(path) + " " + w);
    }
  }
  return {ax, paths};
}

// ---- ghost ------------------------------------------------------------------

// Ghost vectors <w_0..w_n> of R0 lie in the image iff w_k = w_{k-1} mod pi^k.
Report ghost_image(const WittContext& ctx) {
  const RingPtr& B = ctx.base();
  auto alg = AlgebraStructure::identity(B);
  Claim c{"ghost.image_criterion[" + ctx_tag(ctx) + "]", "<w_0..w_n> is a ghost vector iff w_k = w_{k-1} mod pi^k"};
  std::vector<Value> pool;
  if (B->kind() == RingKind::Integers) {
    for (int v = -4; v <= 4; ++v) pool.push_back(B->from_integer(v));
  } else {
    const auto p = static_cast<const UnivariatePolyRing&>(*B).prime();
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t d = 0; d < p; ++d) pool.push_back(FpPoly(p, {a, d}));
    }
  }
  const std::size_t len = ctx.n() + 1;
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    std::vector<Value> g;
    for (std::size_t k : idx) g.push_back(pool[k]);
    bool expect = true;
    for (std::size_t k = 1; k < len; ++k) {
      expect = expect && B->is_zero(reduce_mod_power(B->sub(g[k], g[k - 1]), ctx.pi(), k, *alg));
    }
    bool ok = true;
    try {
      unghost(GhostVector(ctx, alg, g));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CongruenceViolation) throw;
      ok = false;
    }
    c.check(ok == expect, GhostVector(ctx, alg, g).to_string());
    std::size_t k = len;
    while (k > 0 && ++idx[k - 1] == pool.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  Claim s{"ghost.structural_identities[" + ctx_tag(ctx) + "]",
          "gh_k(S) = gh_k(a) + gh_k(b), gh_k(P) = gh_k(a) gh_k(b), gh_k(N) = -gh_k(a), gh_k(F) = gh_{k+1}(a)"};
  for (WittOp op : {WittOp::Sum, WittOp::Product, WittOp::Negation, WittOp::Frobenius}) {
    if (op == WittOp::Frobenius && ctx.n() == 0) continue;
    s.check(ghost_compatible(*structural_polys(ctx, op)), std::string(witt_op_name(op)));
  }
  return {c, s};
}

Report ghost_suite(const Case& c, const Budget& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Ring& A = *c.alg->target();
  const bool tf = c.alg->torsion_free(c.ctx.pi());
  Claim hom{"ghost.homomorphism" + tag(c), "gh : W_n(A) -> A^{[0,n]} is a ring map"};
  Claim round{"ghost.roundtrip" + tag(c), "unghost(gh(x)) = x for pi-torsion-free A"};
  Claim cong{"ghost.congruence_mod_pi" + tag(c), "gh_i(x) = x_0^{q^i} mod pi A"};
  Claim red{"ghost.reduced_components" + tag(c), "rgh_i(x) = gh_i(x') mod pi^{n+1} for any lift x'"};
  const auto big = c.ctx.with_length(c.ctx.n() + 2);
  for (std::size_t k = 0; k < b.samples; ++k) {
    const auto x = random_vector(c.ctx, c.alg, rng), y = random_vector(c.ctx, c.alg, rng);
    const std::string w = x.to_string() + ", " + y.to_string();
    if (tf) {
      const auto gx = ghost(x), gy = ghost(y), gs = ghost(add(x, y)), gp = ghost(mul(x, y));
      bool ok = true;
      for (std::size_t i = 0; i <= c.ctx.n(); ++i) {
        ok = ok && A.equal(gs.entries()[i], A.add(gx.entries()[i], gy.entries()[i]));
        ok = ok && A.equal(gp.entries()[i], A.mul(gx.entries()[i], gy.entries()[i]));
      }
      hom.check(ok, w);
      round.check(unghost(gx) == x, x.to_string());
    }
    for (std::size_t i = 0; i <= c.ctx.n(); ++i) {
      const Value d = A.sub(ghost_component(x, i), A.pow(x.components()[0], c.ctx.q_power(i)));
      cong.check(A.is_zero(reduce_mod_power(d, c.ctx.pi(), 1, *c.alg)), x.to_string() + " i=" + std::to_string(i));
    }
    auto comps = x.components();
    for (std::size_t e = 0; e < 2; ++e) comps.push_back(random_value(A, rng));
    const WittVector lift(big, c.alg, comps);
    for (std::size_t i = c.ctx.n() + 1; i <= big.n(); ++i) {
      const Value lhs = ghost_component(x, i, true);
      const Value rhs = reduce_mod_power(ghost_component(lift, i), c.ctx.pi(), c.ctx.n() + 1, *c.alg);
      red.check(A.equal(lhs, rhs), lift.to_string() + " i=" + std::to_string(i));
    }
  }
  Report r{cong, red};
  if (tf) {
    r.push_back(hom);
    r.push_back(round);
  }
  return r;
}

// ---- Verschiebung, Frobenius, Teichmueller -------------------------------------

Report verschiebung_suite(const Case& c, const Budget& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto up = c.ctx.with_length(c.ctx.n() + 1);
  const auto pi_n = scalar(c.ctx.pi(), c.ctx, c.alg);
  const auto pi_up = scalar(c.ctx.pi(), up, c.alg);
  Claim fv{"verschiebung.frobenius_v" + tag(c), "psi(V(x)) = pi x"};
  Claim proj{"verschiebung.projection" + tag(c), "V(x) z = V(x psi(z))"};
  Claim prod{"verschiebung.product" + tag(c), "V(x) V(y) = pi V(xy)"};
  Claim additive{"verschiebung.additive" + tag(c), "V(x + y) = V(x) + V(y)"};
  Claim iter{"verschiebung.iterate" + tag(c), "V^2 = V o V, V^j(x) = (0,...,0,x)"};
  for (std::size_t k = 0; k < b.samples; ++k) {
    const auto x = random_vector(c.ctx, c.alg, rng), y = random_vector(c.ctx, c.alg, rng);
    const auto z = random_vector(up, c.alg, rng);
    const std::string w = x.to_string() + ", " + y.to_string() + ", " + z.to_string();
    fv.check(frobenius(verschiebung(x)) == mul(pi_n, x), w);
    proj.check(mul(verschiebung(x), z) == verschiebung(mul(x, frobenius(z))), w);
    prod.check(mul(verschiebung(x), verschiebung(y)) == mul(pi_up, verschiebung(mul(x, y))), w);
    additive.check(verschiebung(add(x, y)) == add(verschiebung(x), verschiebung(y)), w);
    iter.check(verschiebung(x, 2) == verschiebung(verschiebung(x)), w);
  }
  return {fv, proj, prod, additive, iter};
}

Report frobenius_suite(const Case& c, const Budget& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Ring& A = *c.alg->target();
  const bool tf = c.alg->torsion_free(c.ctx.pi());
  Claim hom{"frobenius.homomorphism" + tag(c), "psi : W_n(A) -> W_{n-1}(A) is a ring map"};
  Claim lift{"frobenius.lift" + tag(c), "psi(x)_0 = x_0^q mod pi"};
  Claim shift{"frobenius.ghost_shift" + tag(c), "gh_k(psi(x)) = gh_{k+1}(x)"};
  Claim teich{"frobenius.teichmuller" + tag(c), "psi([a]) = [a^q]"};
  hom.check(frobenius(one_vector(c.ctx, c.alg)) == one_vector(c.ctx.with_length(c.ctx.n() - 1), c.alg), "psi(1)");
  for (std::size_t k = 0; k < b.samples; ++k) {
    const auto x = random_vector(c.ctx, c.alg, rng), y = random_vector(c.ctx, c.alg, rng);
    const std::string w = x.to_string() + ", " + y.to_string();
    const auto fx = frobenius(x), fy = frobenius(y);
    hom.check(frobenius(add(x, y)) == add(fx, fy) && frobenius(mul(x, y)) == mul(fx, fy), w);
    const Value d = A.sub(fx.components()[0], A.pow(x.components()[0], c.ctx.q()));
    lift.check(A.is_zero(reduce_mod_power(d, c.ctx.pi(), 1, *c.alg)), x.to_string());
    if (tf) {
      const auto gx = ghost(x), gf = ghost(fx);
      bool ok = true;
      for (std::size_t i = 0; i < c.ctx.n(); ++i) ok = ok && A.equal(gf.entries()[i], gx.entries()[i + 1]);
      shift.check(ok, x.to_string());
    }
    const Value a = random_value(A, rng);
    teich.check(frobenius(teichmuller(a, c.ctx, c.alg)) ==
                    teichmuller(A.pow(a, c.ctx.q()), c.ctx.with_length(c.ctx.n() - 1), c.alg),
                A.format(a));
  }
  Report r{hom, lift, teich};
  if (tf) r.push_back(shift);
  return r;
}

Report teichmuller_suite(const Case& c, const Budget& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Ring& A = *c.alg->target();
  Claim mult{"teichmuller.multiplicative" + tag(c), "[a][b] = [ab]"};
  Claim scale{"teichmuller.scale" + tag(c), "[a] (x_0, x_1, ...) = (a x_0, a^q x_1, ...)"};
  Claim gh{"teichmuller.ghost" + tag(c), "gh_k([a]) = a^{q^k}"};
  Claim one{"teichmuller.one" + tag(c), "[1] = 1"};
  one.check(teichmuller(A.one(), c.ctx, c.alg) == one_vector(c.ctx, c.alg), "[1]");
  for (std::size_t k = 0; k < b.samples; ++k) {
    const Value a = random_value(A, rng), d = random_value(A, rng);
    const auto ta = teichmuller(a, c.ctx, c.alg);
    const auto x = random_vector(c.ctx, c.alg, rng);
    const std::string w = A.format(a) + ", " + A.format(d);
    mult.check(mul(ta, teichmuller(d, c.ctx, c.alg)) == teichmuller(A.mul(a, d), c.ctx, c.alg), w);
    scale.check(teich_scale(a, x) == mul(ta, x), A.format(a) + ", " + x.to_string());
    bool ok = true;
    for (std::size_t i = 0; i <= c.ctx.n(); ++i) {
      ok = ok && A.equal(ghost_component(ta, i), A.pow(a, c.ctx.q_power(i)));
    }
    gh.check(ok, A.format(a));
  }
  return {mult, scale, gh, one};
}

// ---- delta ------------------------------------------------------------------

std::vector<FrobeniusLiftSpec> delta_battery() {
  auto spec = [](const char* json) { return FrobeniusLiftSpec::from_json(json); };
  return {
      spec(R"({"base":"Z","primes":["2"]})"),
      spec(R"({"base":"Z","primes":["3"]})"),
      spec(R"({"base":"Z","primes":["5"]})"),
      spec(R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2"}}})"),
      spec(R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 2"}}})"),
      spec(R"({"base":"Z","primes":["3"],"generators":["x"],"psi":{"3":{"x":"x^3"}}})"),
      spec(R"({"base":"Z","primes":["3"],"generators":["x"],"psi":{"3":{"x":"x^3 + 3"}}})"),
      spec(R"({"base":"Fp[t]:3","primes":["t"],"generators":["x"],"psi":{"t":{"x":"x^3"}}})"),
      spec(R"({"base":"Z","primes":["2","3"]})"),
  };
}

Report delta_examples() {
  Claim lifts{"delta.lift_examples", "psi_alpha(x) = x^{q_alpha} mod pi_alpha, psi_alpha psi_beta = psi_beta psi_alpha"};
  auto check_lift = [&](const char* json, bool expect) {
    lifts.check(check_frobenius_lift(FrobeniusLiftSpec::from_json(json)).ok == expect, json);
  };
  check_lift(R"({"base":"Z","primes":["2"]})", true);
  check_lift(R"({"base":"Z","primes":["7"]})", true);
  check_lift(R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 5"}}})", false);
  check_lift(R"({"base":"Z","primes":["2","3"],"generators":["x"],"psi":{"2":{"x":"x^2"},"3":{"x":"x^3"}}})", true);
  check_lift(R"({"base":"Z","primes":["2","3"],"generators":["x"],"psi":{"2":{"x":"x^2 + 2"},"3":{"x":"x^3"}}})",
             false);
  check_lift(R"({"base":"Fp[t]:2","primes":["t"],"generators":["x"],"psi":{"t":{"x":"x^2 + t"}}})", true);

  Claim values{"delta.examples", "delta_alpha(r) = (r - r^{q_alpha})/pi_alpha; C_alpha(x,y) = -sum binom(q,i)/pi x^{q-i} y^i"};
  const RingPtr Z = integers();
  auto s2 = FrobeniusLiftSpec::from_json(R"({"base":"Z","primes":["2"]})");
  values.check(delta_apply(s2, 0, Integer(2)) == Value(Integer(-1)), "delta_2(2) = -1");
  values.check(delta_apply(s2, 0, Integer(1)) == Value(Integer(0)), "delta_2(1) = 0");
  auto cp = c_polynomials(PrimeFamily::make(Z, {Integer(2), Integer(3)}));
  values.check(cp.ring->format(cp.c[0]) == "-x*y", "C_2 = " + cp.ring->format(cp.c[0]));
  values.check(cp.ring->format(cp.c[1]) == "-x^2*y - x*y^2", "C_3 = " + cp.ring->format(cp.c[1]));
  auto sx = FrobeniusLiftSpec::from_json(R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2"}}})");
  values.check(sx.ring()->is_zero(delta_apply(sx, 0, *sx.ring()->generator("x"))), "delta(x) = 0 under psi(x) = x^2");
  return {lifts, values};
}

Report coaction_suite(const Budget& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Report r;
  struct Item {
    const char* json;
    std::size_t max_n;
  };
  const Item items[] = {
      {R"({"base":"Z","primes":["2"]})", 3},
      {R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 2"}}})", 2},
      {R"({"base":"Fp[t]:3","primes":["t"],"generators":["x"],"psi":{"t":{"x":"x^3 + t*x"}}})", 2},
  };
  for (const auto& it : items) {
    auto spec = FrobeniusLiftSpec::from_json(it.json);
    const Ring& A = *spec.ring();
    for (std::size_t n = 0; n <= it.max_n; ++n) {
      const std::string t = "[" + spec.to_string() + ",n=" + std::to_string(n) + "]";
      Claim gh{"delta.coaction_ghost" + t, "gh_k(coaction(a)) = psi^k(a)"};
      Claim hom{"delta.coaction_homomorphism" + t, "a -> coaction(a) is a ring map A -> W_n(A)"};
      for (std::size_t k = 0; k < b.samples; ++k) {
        const Value a = random_element(spec, rng), c = random_element(spec, rng);
        const auto ca = coaction(spec, 0, a, n), cc = coaction(spec, 0, c, n);
        const auto g = ghost(ca);
        Value p = a;
        bool ok = true;
        for (std::size_t i = 0; i <= n; ++i) {
          ok = ok && A.equal(g.entries()[i], p);
          p = spec.psi(0, p);
        }
        gh.check(ok, A.format(a));
        hom.check(coaction(spec, 0, A.add(a, c), n) == add(ca, cc) && coaction(spec, 0, A.mul(a, c), n) == mul(ca, cc),
                  A.format(a) + ", " + A.format(c));
      }
      r.push_back(gh);
      r.push_back(hom);
    }
  }
  Claim teich{"delta.coaction_teichmuller", "psi(x) = x^p implies coaction(x) = [x]"};
  for (const char* json : {R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2"}}})",
                           R"({"base":"Z","primes":["3"],"generators":["x"],"psi":{"3":{"x":"x^3"}}})"}) {
    auto spec = FrobeniusLiftSpec::from_json(json);
    const Value x = *spec.ring()->generator("x");
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto ctx = WittContext::make(spec.base(), spec.family().prime(0), n);
      teich.check(coaction(spec, 0, x, n) == teichmuller(x, ctx, spec.algebra()), spec.to_string());
    }
  }
  auto two = FrobeniusLiftSpec::from_json(
      R"({"base":"Z","primes":["2","3"],"generators":["x"],"psi":{"2":{"x":"x^2"},"3":{"x":"x^3"}}})");
  const Value x = *two.ring()->generator("x");
  const auto shape = MultiWittVector::make_shape(two.family(), {1, 1}, two.algebra());
  teich.check(coaction(two, x, {1, 1}) == multi_teichmuller(x, shape), two.to_string());
  r.push_back(teich);
  return r;
}

// ---- descent ----------------------------------------------------------------

std::vector<Task> descent_tasks(const Budget& b, std::uint64_t seed) {
  std::vector<Task> tasks;
  const EnumerationLimits lim{b.max_pairs, seed};
  for (const auto& fc : standard_finite_battery()) {
    for (std::size_t n = 1; n <= 2; ++n) {
      tasks.push_back([fc, n, lim] {
        const auto ctx = fc.ctx.with_length(n);
        Report r = kernel_report(fc.alg, ctx);
        append(r, equalizer_report(fc.alg, ctx));
        append(r, ghost_congruence_report(fc.alg, ctx));
        append(r, alpha_homomorphism_report(fc.alg, ctx, lim));
        for (std::size_t j = 0; j <= 2; ++j) append(r, v_sequence_report(fc.alg, ctx, j, lim));
        return r;
      });
    }
  }
  tasks.push_back([lim] {
    const RingPtr Z = integers(), F2t = univariate(2);
    const auto z8 = AlgebraStructure::make(Z, integers_mod(8));
    const auto z4 = AlgebraStructure::make(Z, integers_mod(4));
    const auto z9 = AlgebraStructure::make(Z, integers_mod(9));
    const auto dualZ = AlgebraStructure::make(Z, quotient(F2t, FpPoly(2, {0, 0, 1})));
    const auto dualF = AlgebraStructure::make(F2t, quotient(F2t, FpPoly(2, {0, 0, 1})));
    const auto ctx2 = WittContext::make(Z, Integer(2), 0), ctx3 = WittContext::make(Z, Integer(3), 0);
    const auto ctxt = WittContext::make(F2t, FpPoly(2, {0, 1}), 0);
    Report r;
    for (std::size_t n = 1; n <= 2; ++n) {
      append(r, ideal_product_report(z8, ctx2.with_length(n), Integer(2), Integer(4)));
      append(r, ideal_product_report(z8, ctx2.with_length(n), Integer(2), Integer(2)));
      append(r, nilpotent_ideal_report(z8, ctx2.with_length(n), Integer(4), 2));
      append(r, alpha_injective_report(ctx2.with_length(n), 2));
      append(r, alpha_injective_report(ctxt.with_length(n), 2));
    }
    append(r, nilpotent_ideal_report(z8, ctx2.with_length(1), Integer(2), 3));
    for (std::size_t n = 0; n <= 2; ++n) {
      append(r, surjectivity_report(induced_map(z4, AlgebraStructure::make(Z, prime_field(2))), ctx2.with_length(n), lim));
      append(r, surjectivity_report(induced_map(z8, z4), ctx2.with_length(n), lim));
      append(r, surjectivity_report(induced_map(z9, AlgebraStructure::make(Z, prime_field(3))), ctx3.with_length(n), lim));
      append(r, surjectivity_report(induced_map(z4, z4), ctx2.with_length(n), lim));
      append(r, surjectivity_report(induced_map(dualZ, AlgebraStructure::make(Z, prime_field(2))), ctx2.with_length(n),
                                    lim));
      append(r, surjectivity_report(induced_map(dualF, AlgebraStructure::make(F2t, prime_field(2))),
                                    ctxt.with_length(n), lim));
    }
    return r;
  });
  return tasks;
}

// ---- multi-prime ------------------------------------------------------------

Report multi_suite(const Budget& b, std::uint64_t seed) {
  const RingPtr Z = integers();
  const auto T = truncation_set_context({1, 2, 3, 6});
  const auto alg = AlgebraStructure::identity(Z);
  const auto shape = MultiWittVector::make_shape(T.family, T.n, alg);
  const int bound = b.medium ? 3 : 2;
  Claim inv{"multi.reorder_ghost_invariance", "W_{E,n} = W_{m_1,n_1} o W_{m_2,n_2} = W_{m_2,n_2} o W_{m_1,n_1}"};
  Claim round{"multi.reorder_roundtrip", "reordering twice is the identity"};
  Claim ghost_round{"multi.unghost_roundtrip", "unghost(gh(x)) = x"};
  Claim classical{"multi.classical_ghost", "w_m = sum_{d | m} d x_d^{m/d}"};
  Claim classical_round{"multi.classical_roundtrip", "classical and nested coordinates are inverse bijections"};
  Claim cong{"multi.big_witt_congruence", "w_{pj} = w_j mod p^{1 + ord_p(j)}"};
  Claim image{"multi.big_witt_image", "ghost vectors are exactly those satisfying w_{pj} = w_j mod p^{1+ord_p(j)}"};
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs{{1, 2}, {3, 6}, {1, 3}, {2, 6}};
  auto congruent = [&](const std::map<std::uint64_t, Value>& w) {
    for (auto [j, pj] : pairs) {
      const std::uint64_t p = pj / j;
      std::uint64_t e = 1;
      for (std::uint64_t r = j; r % p == 0; r /= p) ++e;
      Integer mod;
      mpz_ui_pow_ui(mod.get_mpz_t(), p, e);
      if (!mpz_divisible_p(Integer(w.at(pj).integer() - w.at(j).integer()).get_mpz_t(), mod.get_mpz_t())) return false;
    }
    return true;
  };
  std::vector<Value> pool;
  for (int v = -bound; v <= bound; ++v) pool.push_back(Integer(v));
  const auto box = index_box(T.n);
  std::vector<std::size_t> idx(box.size(), 0);
  while (true) {
    std::map<MultiIndex, Value> comps;
    for (std::size_t k = 0; k < box.size(); ++k) comps.emplace(box[k], pool[idx[k]]);
    const auto w = MultiWittVector::from_components(shape, comps);
    const auto g = multi_ghost(w);
    const auto swapped = reorder(w, {1, 0});
    inv.check(multi_ghost(swapped) == g, w.to_string());
    round.check(reorder(swapped, {0, 1}) == w, w.to_string());
    ghost_round.check(multi_unghost(shape, g) == w, w.to_string());
    const auto x = to_classical(w, T);
    const auto wc = classical_big_ghost(*Z, x, T);
    bool same = true;
    for (std::uint64_t m : T.elements) same = same && wc.at(m) == g.at(T.index_of(m));
    classical.check(same, w.to_string());
    classical_round.check(from_classical(x, T, alg) == w, w.to_string());
    cong.check(congruent(wc), w.to_string());
    std::size_t k = box.size();
    while (k > 0 && ++idx[k - 1] == pool.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  // Converse over a box of ghost vectors.
  for (int a = -4; a <= 4; ++a) {
    for (int bb = -4; bb <= 4; ++bb) {
      for (int c = -4; c <= 4; ++c) {
        for (int d = -4; d <= 4; ++d) {
          std::map<std::uint64_t, Value> w{{1, Integer(a)}, {2, Integer(bb)}, {3, Integer(c)}, {6, Integer(d)}};
          std::map<MultiIndex, Value> g;
          for (auto& [m, v] : w) g.emplace(T.index_of(m), v);
          bool ok = true;
          try {
            multi_unghost(shape, g);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::CongruenceViolation) throw;
            ok = false;
          }
          image.check(ok == congruent(w), "<" + std::to_string(a) + "," + std::to_string(bb) + "," +
                                             std::to_string(c) + "," + std::to_string(d) + ">");
        }
      }
    }
  }
  Report r{inv, round, ghost_round, classical, classical_round, cong, image};

  // Torsion algebras and a function-field family, sampled.
  std::mt19937_64 rng(seed);
  struct Fam {
    PrimeFamily family;
    AlgebraPtr alg;
  };
  const RingPtr F2t = univariate(2);
  const std::vector<Fam> fams{
      {T.family, AlgebraStructure::make(Z, integers_mod(4))},
      {T.family, AlgebraStructure::make(Z, integers_mod(9))},
      {PrimeFamily::make(F2t, {FpPoly(2, {0, 1}), FpPoly(2, {1, 1})}), AlgebraStructure::identity(F2t)},
      {PrimeFamily::make(F2t, {FpPoly(2, {0, 1}), FpPoly(2, {1, 1})}),
       AlgebraStructure::make(F2t, quotient(F2t, FpPoly(2, {1, 0, 0, 1})))},
  };
  for (const auto& f : fams) {
    const auto sh = MultiWittVector::make_shape(f.family, {1, 1}, f.alg);
    const std::string t = "[" + f.family.to_string() + "|" + f.alg->target()->name() + "]";
    Claim hom{"multi.reorder_homomorphism" + t, "the interchange W_{m_1} W_{m_2} = W_{m_2} W_{m_1} is a ring map"};
    Claim rt{"multi.reorder_roundtrip" + t, "reordering twice is the identity"};
    Claim tm{"multi.teichmuller" + t, "[a][b] = [ab]"};
    const Ring& A = *f.alg->target();
    for (std::size_t k = 0; k < b.samples; ++k) {
      std::map<MultiIndex, Value> cx, cy;
      for (const auto& i : index_box({1, 1})) {
        cx.emplace(i, random_value(A, rng, 3));
        cy.emplace(i, random_value(A, rng, 3));
      }
      const auto x = MultiWittVector::from_components(sh, cx), y = MultiWittVector::from_components(sh, cy);
      const auto rx = reorder(x, {1, 0}), ry = reorder(y, {1, 0});
      hom.check(reorder(multi_add(x, y), {1, 0}) == multi_add(rx, ry) &&
                    reorder(multi_mul(x, y), {1, 0}) == multi_mul(rx, ry),
                x.to_string() + ", " + y.to_string());
      rt.check(reorder(rx, {0, 1}) == x, x.to_string());
      const Value a = random_value(A, rng, 3), c = random_value(A, rng, 3);
      tm.check(multi_mul(multi_teichmuller(a, sh), multi_teichmuller(c, sh)) == multi_teichmuller(A.mul(a, c), sh),
               A.format(a) + ", " + A.format(c));
    }
    r.push_back(hom);
    r.push_back(rt);
    r.push_back(tm);
  }
  return r;
}

// ---- presentations ------------------------------------------------------------

Report coord_suite() {
  const RingPtr Z = integers(), F2t = univariate(2), F3t = univariate(3);
  Report r;
  Claim low{"presentation.coord_change_low", "delta^0 = theta_0 and delta^1 = theta_1"};
  Claim high{"presentation.delta2_ne_theta2", "delta^2 != theta_2"};
  Claim rt{"presentation.coord_roundtrip", "theta(delta(theta)) = theta and delta(theta(delta)) = delta"};
  for (const auto& ctx : {WittContext::make(Z, Integer(2), 3), WittContext::make(Z, Integer(3), 2),
                          WittContext::make(F2t, FpPoly(2, {0, 1}), 2), WittContext::make(F3t, FpPoly(3, {0, 1}), 2)}) {
    auto c = coord_change(ctx);
    const auto& T = *c->theta_ring;
    const auto& D = *c->delta_ring;
    low.check(T.equal(c->delta_of_theta[0], T.variable(0)) && T.equal(c->delta_of_theta[1], T.variable(1)),
              ctx_tag(ctx));
    if (ctx.base()->kind() == RingKind::Integers) {
      high.check(!T.equal(c->delta_of_theta[2], T.variable(2)), ctx_tag(ctx) + ": " + T.format(c->delta_of_theta[2]));
    }
    auto algT = AlgebraStructure::make(ctx.base(), c->theta_ring);
    auto algD = AlgebraStructure::make(ctx.base(), c->delta_ring);
    for (std::size_t i = 0; i <= ctx.n(); ++i) {
      const Value back = evaluate(D, c->theta_of_delta[i], *algT, c->delta_of_theta);
      const Value fwd = evaluate(T, c->delta_of_theta[i], *algD, c->theta_of_delta);
      rt.check(T.equal(back, T.variable(i)) && D.equal(fwd, D.variable(i)), ctx_tag(ctx) + " i=" + std::to_string(i));
    }
  }
  return {low, high, rt};
}

Report expansion_suite(const Budget& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const RingPtr Z = integers();
  Report r;
  for (const auto& base : {Z, univariate(3)}) {
    auto P = std::static_pointer_cast<const MultiPolyRing>(multi(base, {"x", "y"}));
    const std::vector<WittContext> ctxs =
        base->kind() == RingKind::Integers
            ? std::vector<WittContext>{WittContext::make(Z, Integer(2), 2), WittContext::make(Z, Integer(3), 2)}
            : std::vector<WittContext>{WittContext::make(base, FpPoly(3, {0, 1}), 2)};
    for (const auto& ctx : ctxs) {
      const std::string t = "[" + ctx_tag(ctx) + "]";
      Claim consistent{"presentation.style_consistency" + t, "the coordinate change carries delta^i(f) to theta_i(f)"};
      Claim mult{"presentation.theta_ring_map" + t, "theta(f g) = theta(f) theta(g), theta(f + g) = theta(f) + theta(g)"};
      auto S = operator_ring(*P, ctx.n(), PresentationStyle::Theta);
      auto algS = AlgebraStructure::make(base, S);
      const std::size_t count = std::max<std::size_t>(4, b.samples / 10);
      for (std::size_t k = 0; k < count; ++k) {
        const Value f = random_value(*P, rng, 2), g = random_value(*P, rng, 2);
        const auto tf = theta_expand(*P, f, ctx), tg = theta_expand(*P, g, ctx);
        const auto lhs = delta_to_theta(*P, delta_expand(*P, f, ctx), ctx);
        const auto rhs = theta_vector_to_delta(*P, tf, ctx);
        bool ok = lhs.size() == rhs.size();
        for (std::size_t i = 0; ok && i < lhs.size(); ++i) ok = S->equal(lhs[i], rhs[i]);
        consistent.check(ok, P->format(f));
        const WittVector wf(ctx, algS, tf), wg(ctx, algS, tg);
        const WittVector wp(ctx, algS, theta_expand(*P, P->mul(f, g), ctx));
        const WittVector ws(ctx, algS, theta_expand(*P, P->add(f, g), ctx));
        mult.check(wp == mul(wf, wg) && ws == add(wf, wg), P->format(f) + ", " + P->format(g));
      }
      r.push_back(consistent);
      r.push_back(mult);
    }
  }
  Claim free_alg{"presentation.free_algebra", "Lambda_n (.) Z[x] = Z[theta_0, ..., theta_n]"};
  for (std::size_t n = 0; n <= 3; ++n) {
    auto L = lambda_presentation(make_presentation(Z, {"x"}, {}), WittContext::make(Z, Integer(2), n),
                                 PresentationStyle::Theta);
    free_alg.check(L.generators.size() == n + 1 && L.relations.empty(), "n=" + std::to_string(n));
  }
  r.push_back(free_alg);
  return r;
}

std::vector<Task> presentation_tasks(const Budget& b, std::uint64_t seed) {
  std::vector<Task> tasks;
  const RingPtr Z = integers(), F3t = univariate(3);
  const std::size_t top = b.medium ? 4 : 3;
  for (int p : {2, 3}) {
    tasks.push_back([Z, p, top] {
      Report r;
      for (std::size_t n = 0; n <= top; ++n) append(r, verify_wn_presentation(Z, Integer(p), n));
      return r;
    });
  }
  tasks.push_back([F3t] {
    Report r;
    for (std::size_t n = 0; n <= 3; ++n) append(r, verify_wn_presentation(F3t, FpPoly(3, {0, 1}), n));
    return r;
  });
  tasks.push_back([] { return coord_suite(); });
  tasks.push_back([b, seed] { return expansion_suite(b, seed); });
  return tasks;
}

// ---- driver -------------------------------------------------------------------

std::vector<Task> suite_tasks(const std::string& suite, const Budget& b, std::uint64_t seed, SuiteSize size) {
  std::vector<Task> tasks;
  auto per_case = [&](const std::string& name, Report (*fn)(const Case&, const Budget&, std::uint64_t),
                      bool needs_length) {
    for (const auto& c : cases(size)) {
      if (needs_length && c.ctx.n() == 0) continue;
      const std::uint64_t s = derive_seed(seed, name + tag(c));
      tasks.push_back([c, b, s, fn] { return fn(c, b, s); });
    }
  };
  if (suite == "ring-axioms") per_case(suite, ring_axioms, false);
  if (suite == "ghost") {
    per_case(suite, ghost_suite, false);
    for (const auto& ctx : contexts(size)) tasks.push_back([ctx] { return ghost_image(ctx); });
  }
  if (suite == "verschiebung") per_case(suite, verschiebung_suite, false);
  if (suite == "frobenius") per_case(suite, frobenius_suite, true);
  if (suite == "teichmuller") per_case(suite, teichmuller_suite, false);
  if (suite == "delta-axioms") {
    for (const auto& spec : delta_battery()) {
      const std::uint64_t s = derive_seed(seed, spec.to_string());
      const std::size_t samples = b.medium ? 1000 : 300;
      tasks.push_back([spec, s, samples] {
        Claim valid{"delta.lift_valid", "psi is a commuting family of Frobenius lifts"};
        auto lc = check_frobenius_lift(spec);
        valid.check(lc.ok, lc.diagnostic);
        Report r{valid};
        append(r, check_delta_axioms(spec, samples, s));
        suffix_all(r, "[" + spec.to_string() + "]");
        return r;
      });
    }
    tasks.push_back([] { return delta_examples(); });
    tasks.push_back([b, seed] { return coaction_suite(Budget{b.samples / 2, b.max_pairs, b.medium}, seed); });
  }
  if (suite == "descent") tasks = descent_tasks(b, seed);
  if (suite == "multi-prime") tasks.push_back([b, seed] { return multi_suite(b, seed); });
  if (suite == "presentations") tasks = presentation_tasks(b, seed);
  return tasks;
}

}  // namespace

SuiteSize parse_suite_size(std::string_view s) {
  if (s == "small") return SuiteSize::Small;
  if (s == "medium") return SuiteSize::Medium;
  fail(ErrorCode::ParseError, "unknown suite size '" + std::string(s) + "'");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ring-axioms", "ghost",       "verschiebung",  "frobenius",
                                              "teichmuller", "delta-axioms", "descent",      "multi-prime",
                                              "presentations", "all"};
  return names;
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Value random_value(const Ring& A, std::mt19937_64& rng, int bound) {
  switch (A.kind()) {
    case RingKind::Integers:
      return A.from_integer(std::uniform_int_distribution<int>(-bound, bound)(rng));
    case RingKind::IntegersMod:
    case RingKind::PrimeField:
    case RingKind::QuotientPoly: {
      thread_local std::map<std::string, std::vector<Value>> memo;
      auto it = memo.find(A.name());
      if (it == memo.end()) it = memo.emplace(A.name(), *A.elements()).first;
      return it->second[std::uniform_int_distribution<std::size_t>(0, it->second.size() - 1)(rng)];
    }
    case RingKind::UnivariatePoly: {
      const auto p = static_cast<const UnivariatePolyRing&>(A).prime();
      std::vector<std::uint32_t> cs(3);
      for (auto& c : cs) c = std::uniform_int_distribution<std::uint32_t>(0, p - 1)(rng);
      return FpPoly(p, cs);
    }
    case RingKind::MultiPoly: {
      const auto& m = static_cast<const MultiPolyRing&>(A);
      Value acc = A.zero();
      std::vector<Value> monos{A.one()};
      for (std::size_t i = 0; i < m.nvars(); ++i) {
        monos.push_back(m.variable(i));
        for (std::size_t j = i; j < m.nvars(); ++j) monos.push_back(A.mul(m.variable(i), m.variable(j)));
      }
      for (const auto& mono : monos) {
        acc = A.add(acc, A.mul(m.embed(random_value(*m.base(), rng, std::min(bound, 3))), mono));
      }
      return acc;
    }
    default:
      fail(ErrorCode::Unsupported, "no sampler for " + A.name());
  }
}

WittVector random_vector(const WittContext& ctx, const AlgebraPtr& alg, std::mt19937_64& rng, int bound) {
  std::vector<Value> comps;
  for (std::size_t i = 0; i <= ctx.n(); ++i) comps.push_back(random_value(*alg->target(), rng, bound));
  return WittVector(ctx, alg, std::move(comps));
}

Report run_selftest(const SelftestOptions& opts) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), opts.suite) == names.end()) {
    fail(ErrorCode::ParseError, "unknown suite '" + opts.suite + "'");
  }
  const Budget b = budget(opts.size);
  std::vector<Task> tasks;
  for (const auto& name : names) {
    if (name == "all" || (opts.suite != "all" && opts.suite != name)) continue;
    for (auto& t : suite_tasks(name, b, derive_seed(opts.seed, name), opts.size)) tasks.push_back(std::move(t));
  }
  std::vector<Report> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  unsigned jobs = opts.jobs ? opts.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1)));
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Report merged;
  for (auto& r : results) append(merged, std::move(r));
  std::stable_sort(merged.begin(), merged.end(),
                   [](const Claim& a, const Claim& c) { return a.claim_id < c.claim_id; });
  return merged;
}

}  // namespace witt
