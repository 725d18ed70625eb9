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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "witt/algebra.hpp"
#include "witt/delta.hpp"
#include "witt/descent.hpp"
#include "witt/error.hpp"
#include "witt/multi.hpp"
#include "witt/parse.hpp"
#include "witt/presentations.hpp"
#include "witt/rings.hpp"
#include "witt/selftest.hpp"
#include "witt/sparse_poly.hpp"
#include "witt/structural.hpp"
#include "witt/witt_vector.hpp"

using namespace witt;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  std::uint64_t checked = 0;
  std::vector<std::string> failures;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      pass = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
  void absorb(const Report& r) {
    for (const auto& c : r) {
      checked += c.universe_size;
      if (!c.passed()) {
        pass = false;
        if (failures.size() < 5) failures.push_back(c.claim_id + ": " + (c.failures.empty() ? "" : c.failures[0]));
      }
    }
  }
};

Value el(const RingPtr& r, const std::string& s) { return parse_element(r, s).value(); }

FpPoly tpoly(std::uint32_t p) { return FpPoly(p, {0, 1}); }

// The (R0, pi) pairs of criteria 3 and 4.
std::vector<WittContext> base_contexts() {
  const RingPtr Z = integers();
  return {WittContext::make(Z, Integer(2), 0),
          WittContext::make(Z, Integer(3), 0),
          WittContext::make(Z, Integer(5), 0),
          WittContext::make(univariate(2), tpoly(2), 0),
          WittContext::make(univariate(3), tpoly(3), 0),
          WittContext::make(univariate(5), tpoly(5), 0),
          WittContext::make(univariate(2), FpPoly(2, {1, 1, 1}), 0)};
}

// ---- 1 ----------------------------------------------------------------------

Verdict criterion1() {
  Verdict v;
  const RingPtr Z = integers();
  for (long p : {2, 3, 5}) {
    auto Fp = AlgebraStructure::make(Z, prime_field(p));
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto ctx = WittContext::make(Z, Integer(p), n);
      long order = 1;
      for (std::size_t i = 0; i <= n; ++i) order *= p;
      const auto one = one_vector(ctx, Fp);
      std::vector<WittVector> image{zero_vector(ctx, Fp)};
      for (long k = 1; k < order; ++k) image.push_back(add(image.back(), one));
      const std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n);
      v.check(add(image.back(), one).is_zero(), tag + ": p^{n+1}[1] != 0");
      std::set<std::string> seen;
      for (const auto& w : image) seen.insert(w.to_string());
      v.check(seen.size() == static_cast<std::size_t>(order), tag + ": not injective");
      v.check(enumerate_witt(ctx, Fp).size() == static_cast<std::size_t>(order), tag + ": wrong cardinality");
      for (long a = 0; a < order; ++a) {
        for (long b = 0; b < order; ++b) {
          const auto& x = image[a];
          const auto& y = image[b];
          v.check(add(x, y) == image[(a + b) % order], tag + ": sum " + std::to_string(a) + "," + std::to_string(b));
          v.check(mul(x, y) == image[(a * b) % order], tag + ": product " + std::to_string(a) + "," + std::to_string(b));
        }
      }
    }
  }
  const auto ctx = WittContext::make(Z, Integer(2), 1);
  const auto F2 = AlgebraStructure::make(Z, prime_field(2));
  const auto t1 = teichmuller(Integer(1), ctx, F2);
  const auto s2 = add(t1, t1), s3 = add(s2, t1), s4 = add(s3, t1);
  v.check(s2.to_string() == "(0,1)" && s3.to_string() == "(1,1)" && s4.to_string() == "(0,0)",
          "W_1(F_2) witness: " + s2.to_string() + " " + s3.to_string() + " " + s4.to_string());
  v.detail = "Z/p^(n+1) -> W_n(F_p) for p in {2,3,5}, n <= 3, all sums and products";
  return v;
}

// ---- 2 ----------------------------------------------------------------------

Verdict criterion2() {
  Verdict v;
  const RingPtr Z = integers();
  const auto ctx = WittContext::make(Z, Integer(2), 2);
  const auto alg = AlgebraStructure::identity(Z);
  auto mod = [](long a, long m) { return ((a % m) + m) % m; };
  for (long a0 = -8; a0 <= 8; ++a0) {
    for (long a1 = -8; a1 <= 8; ++a1) {
      for (long a2 = -8; a2 <= 8; ++a2) {
        const bool expect = mod(a0 - a1, 2) == 0 && mod(a1 - a2, 4) == 0;
        const GhostVector g(ctx, alg, {Integer(a0), Integer(a1), Integer(a2)});
        bool ok = false;
        try {
          ok = ghost(unghost(g)) == g;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::CongruenceViolation) throw;
        }
        v.check(ok == expect, g.to_string());
      }
    }
  }
  v.detail = "unghost over 17^3 triples in [-8,8], p = 2, n = 2";
  return v;
}

// ---- 3 ----------------------------------------------------------------------

Verdict criterion3() {
  constexpr std::size_t kTermLimit = 3'000'000;
  constexpr std::uint64_t kWorkLimit = 400'000'000;
  struct Outcome {
    std::uint64_t sets = 0;
    std::vector<std::string> failures;
  };
  std::vector<std::future<Outcome>> jobs;
  for (const auto& base : base_contexts()) {
    jobs.push_back(std::async(std::launch::async, [base] {
      poly_term_limit() = kTermLimit;
      poly_work_limit() = kWorkLimit;
      Outcome o;
      for (std::size_t n = 0; n <= 4; ++n) {
        const auto ctx = base.with_length(n);
        for (WittOp op : {WittOp::Sum, WittOp::Product, WittOp::Negation, WittOp::Frobenius}) {
          if (op == WittOp::Frobenius && n == 0) continue;
          const std::string tag = ctx.describe() + " " + std::string(witt_op_name(op));
          try {
            const auto s = structural_polys(ctx, op);
            ++o.sets;
            if (!ghost_compatible(*s)) o.failures.push_back(tag + ": ghost mismatch");
          } catch (const Error& e) {
            o.failures.push_back(tag + ": " + e.what());
          }
          clear_structural_cache();
        }
      }
      return o;
    }));
  }
  Verdict v;
  for (auto& j : jobs) {
    auto o = j.get();
    v.checked += o.sets;
    for (auto& f : o.failures) {
      v.pass = false;
      v.failures.push_back(std::move(f));
    }
  }
  v.detail = "structural polynomials for q in {2,3,4,5}, n <= 4, all ops, Z and F_p[t]";
  return v;
}

// ---- 4 ----------------------------------------------------------------------

std::vector<AlgebraPtr> operator_algebras(const RingPtr& B) {
  if (B->kind() == RingKind::Integers) {
    return {AlgebraStructure::identity(B), AlgebraStructure::make(B, integers_mod(8)),
            AlgebraStructure::make(B, quotient(univariate(2), FpPoly(2, {0, 0, 1})))};
  }
  const auto p = static_cast<const UnivariatePolyRing&>(*B).prime();
  return {AlgebraStructure::identity(B), AlgebraStructure::make(B, quotient(B, FpPoly(p, {0, 0, 1})))};
}

Verdict criterion4() {
  constexpr std::size_t kSamples = 1000;
  struct Job {
    WittContext ctx;
    AlgebraPtr alg;
  };
  std::vector<Job> work;
  for (const auto& base : base_contexts()) {
    for (const auto& alg : operator_algebras(base.base())) {
      for (std::size_t n = 1; n <= 4; ++n) work.push_back({base.with_length(n), alg});
    }
  }
  std::vector<std::future<Verdict>> futs;
  for (const auto& job : work) {
    futs.push_back(std::async(std::launch::async, [job] {
      Verdict v;
      const auto& ctx = job.ctx;
      const auto& alg = job.alg;
      const Ring& A = *alg->target();
      const bool torsion_free = alg->torsion_free(ctx.pi());
      const auto lower = ctx.with_length(ctx.n() - 1);
      const auto pi = scalar(ctx.pi(), ctx, alg);
      const std::string tag = ctx.describe() + ", A = " + alg->name();
      std::mt19937_64 rng(derive_seed(2026, tag));
      for (std::size_t k = 0; k < kSamples; ++k) {
        const auto x = random_vector(ctx, alg, rng), z = random_vector(ctx, alg, rng);
        const auto xl = random_vector(lower, alg, rng), yl = random_vector(lower, alg, rng);
        const Value a = random_value(A, rng), b = random_value(A, rng);
        const std::string w = tag + " x=" + x.to_string();
        v.check(frobenius(verschiebung(x)) == mul(pi, x), "psi V: " + w);
        v.check(mul(verschiebung(xl), z) == verschiebung(mul(xl, frobenius(z))), "V(x)z: " + w);
        v.check(mul(verschiebung(xl), verschiebung(yl)) == mul(pi, verschiebung(mul(xl, yl))), "V(x)V(y): " + w);
        v.check(mul(teichmuller(a, ctx, alg), teichmuller(b, ctx, alg)) == teichmuller(A.mul(a, b), ctx, alg),
                "[a][b]: " + tag);
        v.check(teich_scale(a, z) == mul(teichmuller(a, ctx, alg), z), "teich_scale: " + w);
        if (torsion_free) {
          const auto gx = ghost(x), gz = ghost(z), gs = ghost(add(x, z)), gp = ghost(mul(x, z));
          bool ok = true;
          for (std::size_t i = 0; i <= ctx.n(); ++i) {
            ok = ok && A.equal(gs.entries()[i], A.add(gx.entries()[i], gz.entries()[i])) &&
                 A.equal(gp.entries()[i], A.mul(gx.entries()[i], gz.entries()[i]));
          }
          v.check(ok, "ghost hom: " + w);
        }
      }
      return v;
    }));
  }
  Verdict v;
  for (auto& f : futs) {
    auto r = f.get();
    v.checked += r.checked;
    if (!r.pass) {
      v.pass = false;
      for (auto& s : r.failures) v.failures.push_back(std::move(s));
    }
  }
  v.detail = std::to_string(work.size()) + " (context, algebra, n) cases x " + std::to_string(kSamples) + " samples";
  return v;
}

// ---- 5 ----------------------------------------------------------------------

Verdict criterion5() {
  std::vector<std::future<Report>> futs;
  for (const auto& fc : standard_finite_battery()) {
    for (std::size_t n = 0; n <= 2; ++n) {
      futs.push_back(std::async(std::launch::async, [fc, n] {
        const auto ctx = fc.ctx.with_length(n);
        Report r = ghost_congruence_report(fc.alg, ctx);
        for (std::size_t j = 0; j <= 2; ++j) {
          auto s = v_sequence_report(fc.alg, ctx, j);
          r.insert(r.end(), s.begin(), s.end());
        }
        if (n >= 1) {
          for (auto s : {kernel_report(fc.alg, ctx), equalizer_report(fc.alg, ctx),
                         alpha_homomorphism_report(fc.alg, ctx)}) {
            r.insert(r.end(), s.begin(), s.end());
          }
        }
        return r;
      }));
    }
  }
  futs.push_back(std::async(std::launch::async, [] {
    const RingPtr Z = integers(), F2t = univariate(2);
    const auto z8 = AlgebraStructure::make(Z, integers_mod(8));
    const auto z4 = AlgebraStructure::make(Z, integers_mod(4));
    const auto z9 = AlgebraStructure::make(Z, integers_mod(9));
    const auto dual = AlgebraStructure::make(Z, quotient(F2t, FpPoly(2, {0, 0, 1})));
    const auto ctx2 = WittContext::make(Z, Integer(2), 0), ctx3 = WittContext::make(Z, Integer(3), 0);
    Report r;
    auto add = [&r](Report s) { r.insert(r.end(), s.begin(), s.end()); };
    for (std::size_t n = 0; n <= 2; ++n) {
      add(ideal_product_report(z8, ctx2.with_length(n), Integer(2), Integer(4)));
      add(ideal_product_report(z8, ctx2.with_length(n), Integer(2), Integer(2)));
      add(nilpotent_ideal_report(z8, ctx2.with_length(n), Integer(4), 2));
      add(nilpotent_ideal_report(z8, ctx2.with_length(n), Integer(2), 3));
      add(surjectivity_report(induced_map(z8, z4), ctx2.with_length(n)));
      add(surjectivity_report(induced_map(z4, AlgebraStructure::make(Z, prime_field(2))), ctx2.with_length(n)));
      add(surjectivity_report(induced_map(z9, AlgebraStructure::make(Z, prime_field(3))), ctx3.with_length(n)));
      add(surjectivity_report(induced_map(dual, AlgebraStructure::make(Z, prime_field(2))), ctx2.with_length(n)));
      if (n >= 1) add(alpha_injective_report(ctx2.with_length(n), 3));
    }
    return r;
  }));
  Verdict v;
  for (auto& f : futs) v.absorb(f.get());
  v.detail = "descent reports over Z/4, Z/8, Z/9, F_2, F_3, F_2[t]/(t^2), n <= 2, j <= 2";
  return v;
}

// ---- 6 ----------------------------------------------------------------------

Verdict criterion6() {
  const char* battery[] = {
      R"({"base":"Z","primes":["2"]})",
      R"({"base":"Z","primes":["3"]})",
      R"({"base":"Z","primes":["5"]})",
      R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2"}}})",
      R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 2"}}})",
      R"({"base":"Z","primes":["3"],"generators":["x"],"psi":{"3":{"x":"x^3 + 3"}}})",
      R"({"base":"Fp[t]:3","primes":["t"],"generators":["x"],"psi":{"t":{"x":"x^3 + t*x"}}})",
      R"({"base":"Z","primes":["2","3"]})",
      R"({"base":"Z","primes":["2","3"],"generators":["x"],"psi":{"2":{"x":"x^2"},"3":{"x":"x^3"}}})",
  };
  std::vector<std::future<Report>> futs;
  for (const char* json : battery) {
    futs.push_back(std::async(std::launch::async, [json] {
      const auto spec = FrobeniusLiftSpec::from_json(json);
      Report r = check_delta_axioms(spec, 1000, derive_seed(6, json));
      Claim lift{"lift", json};
      const auto lc = check_frobenius_lift(spec);
      lift.check(lc.ok, lc.diagnostic);
      r.push_back(lift);
      return r;
    }));
  }
  Verdict v;
  bool saw_axiom4 = false;
  for (auto& f : futs) {
    const auto r = f.get();
    for (const auto& c : r) saw_axiom4 = saw_axiom4 || c.claim_id.rfind("delta.axiom4", 0) == 0;
    v.absorb(r);
  }
  const auto cp = c_polynomials(PrimeFamily::make(integers(), {Integer(2), Integer(3)}));
  v.check(cp.ring->equal(cp.c_pair(0, 1), el(cp.ring, "-x^4*y + x^3*z - 2*x^2*y^2 - y^3 + z^2")), "C_{2,3}");
  v.check(saw_axiom4, "two-prime commutation axiom not exercised");
  v.detail = "axioms (1)-(4), symbolic and 1000 samples, 9 lift specifications";
  return v;
}

// ---- 7 ----------------------------------------------------------------------

Verdict criterion7() {
  Verdict v;
  struct Item {
    const char* json;
    std::size_t max_n;
  };
  const Item items[] = {
      {R"({"base":"Z","primes":["2"]})", 3},
      {R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2 + 2"}}})", 2},
  };
  for (const auto& it : items) {
    const auto spec = FrobeniusLiftSpec::from_json(it.json);
    const Ring& A = *spec.ring();
    std::mt19937_64 rng(derive_seed(7, it.json));
    for (std::size_t n = 0; n <= it.max_n; ++n) {
      for (int k = 0; k < 200; ++k) {
        const Value a = random_element(spec, rng), b = random_element(spec, rng);
        const auto ca = coaction(spec, 0, a, n), cb = coaction(spec, 0, b, n);
        const auto g = ghost(ca);
        Value p = a;
        for (std::size_t i = 0; i <= n; ++i) {
          v.check(A.equal(g.entries()[i], p), std::string(it.json) + " ghost a=" + A.format(a));
          p = spec.psi(0, p);
        }
        v.check(coaction(spec, 0, A.add(a, b), n) == add(ca, cb), "sum a=" + A.format(a) + " b=" + A.format(b));
        v.check(coaction(spec, 0, A.mul(a, b), n) == mul(ca, cb), "product a=" + A.format(a) + " b=" + A.format(b));
      }
    }
  }
  for (const char* json : {R"({"base":"Z","primes":["2"],"generators":["x"],"psi":{"2":{"x":"x^2"}}})",
                           R"({"base":"Z","primes":["3"],"generators":["x"],"psi":{"3":{"x":"x^3"}}})"}) {
    const auto spec = FrobeniusLiftSpec::from_json(json);
    const Value x = *spec.ring()->generator("x");
    for (std::size_t n = 0; n <= 3; ++n) {
      const auto ctx = WittContext::make(spec.base(), spec.family().prime(0), n);
      v.check(coaction(spec, 0, x, n) == teichmuller(x, ctx, spec.algebra()), std::string(json) + " [x]");
    }
  }
  v.detail = "ghost(coaction(a))_k = psi^k(a), ring map, coaction(x) = [x]";
  return v;
}

// ---- 8 ----------------------------------------------------------------------

Verdict criterion8() {
  Verdict v;
  const RingPtr Z = integers();
  const auto alg = AlgebraStructure::identity(Z);
  const auto T = truncation_set_context({1, 2, 3, 6});
  const auto fam = PrimeFamily::make(Z, {Integer(2), Integer(3)});
  const auto shape = MultiWittVector::make_shape(fam, {1, 1}, alg);
  const auto boxes = index_box({1, 1});
  auto ord = [](std::uint64_t j, std::uint64_t p) {
    std::uint64_t e = 0;
    while (j % p == 0) {
      j /= p;
      ++e;
    }
    return e;
  };
  std::vector<long> c(4, -3);
  std::uint64_t count = 0;
  while (true) {
    std::map<MultiIndex, Value> comps;
    for (std::size_t k = 0; k < 4; ++k) comps[boxes[k]] = Integer(c[k]);
    const auto w = MultiWittVector::from_components(shape, comps);
    const std::string tag = w.to_string();
    const auto g = multi_ghost(w);
    const auto swapped = reorder(w, {1, 0});
    v.check(multi_ghost(swapped) == g, "reorder changes ghost: " + tag);
    v.check(reorder(swapped, {0, 1}) == w, "reorder round trip: " + tag);
    v.check(multi_unghost(shape, g) == w, "unghost round trip: " + tag);
    const auto x = to_classical(w, T);
    v.check(from_classical(x, T, alg) == w, "classical round trip: " + tag);
    const auto bg = classical_big_ghost(*Z, x, T);
    for (std::uint64_t j : {1, 2, 3, 6}) {
      for (std::uint64_t p : {2, 3}) {
        if (!bg.count(p * j)) continue;
        Integer m = 1;
        for (std::uint64_t e = 0; e <= ord(j, p); ++e) m *= static_cast<unsigned long>(p);
        const Integer diff = bg.at(j).integer() - bg.at(p * j).integer();
        v.check(diff % m == 0, "big ghost congruence j=" + std::to_string(j) + " p=" + std::to_string(p) + ": " + tag);
      }
    }
    ++count;
    std::size_t k = 0;
    while (k < 4 && c[k] == 3) c[k++] = -3;
    if (k == 4) break;
    ++c[k];
  }
  v.detail = std::to_string(count) + " vectors in [-3,3]^4, E = {2,3}, n = (1,1)";
  return v;
}

// ---- 9 ----------------------------------------------------------------------

Verdict criterion9() {
  Verdict v;
  for (long p : {2, 3}) {
    for (std::size_t n = 0; n <= 4; ++n) v.absorb(verify_wn_presentation(integers(), Integer(p), n));
  }
  const auto F3t = univariate(3);
  for (std::size_t n = 0; n <= 3; ++n) v.absorb(verify_wn_presentation(F3t, tpoly(3), n));
  const auto c = coord_change(WittContext::make(integers(), Integer(2), 2));
  const auto& R = *c->theta_ring;
  v.check(R.equal(c->delta_of_theta[0], R.variable(0)), "delta^0 != theta_0");
  v.check(R.equal(c->delta_of_theta[1], R.variable(1)), "delta^1 != theta_1");
  v.check(!R.equal(c->delta_of_theta[2], R.variable(2)), "delta^2 == theta_2");
  v.check(R.equal(c->delta_of_theta[2], el(c->theta_ring, "theta2 - theta0^2*theta1 - theta1^2")),
          "delta^2 = " + R.format(c->delta_of_theta[2]));
  v.detail = "W_n presentations over Z (p = 2, 3, n <= 4) and F_3[t] (n <= 3); theta/delta coordinates";
  return v;
}

// ---- 10 ---------------------------------------------------------------------

// x_0 = y_0, x_1 = u y_1, x_2 = u^2 y_2 + pi^{-1}(u - u^q) y_1^q, substituted
// into the generic rebase y(x), must give back y.
void check_rebase(Verdict& v, const WittContext& ctx, const Value& u) {
  const auto rp = rebase_polys(ctx, u);
  const auto& S = *rp->ring;
  const RingPtr B = ctx.base();
  const auto alg = AlgebraStructure::make(B, rp->ring);
  const std::uint64_t q = ctx.q_power(1);
  const Value y0 = S.variable(0), y1 = S.variable(1), y2 = S.variable(2);
  const Value corr = *B->exact_div(B->sub(u, B->pow(u, q)), ctx.pi());
  const Value x0 = y0;
  const Value x1 = S.mul(S.embed(u), y1);
  const Value x2 = S.add(S.mul(S.embed(B->pow(u, 2)), y2), S.mul(S.embed(corr), S.pow(y1, q)));
  const std::vector<Value> xs{x0, x1, x2};
  for (std::size_t k = 0; k <= 2; ++k) {
    const Value back = evaluate(S, rp->polys[k], *alg, xs);
    v.check(S.equal(back, S.variable(k)), ctx.describe() + ": y_" + std::to_string(k) + " = " + S.format(back));
  }
  v.detail += " " + B->name() + ": pi^-1(u - u^q) = " + B->format(corr) + ";";
}

Verdict criterion10() {
  Verdict v;
  v.detail = "generic rebase matches the closed form;";
  const auto F3t = univariate(3);
  check_rebase(v, WittContext::make(F3t, tpoly(3), 2), FpPoly::constant(3, 2));
  check_rebase(v, WittContext::make(integers(), Integer(2), 2), Integer(-1));
  check_rebase(v, WittContext::make(integers(), Integer(3), 2), Integer(-1));
  return v;
}

}  // namespace

// With arguments, runs only the listed criteria.
int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  const std::vector<std::pair<int, std::function<Verdict()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10},
  };
  int failed = 0;
  int ran = 0;
  for (const auto& [id, fn] : criteria) {
    if (!only.empty() && !only.count(id)) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.pass = false;
      v.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d: %s  %s [%llu checks, %.1fs]\n", id, v.pass ? "PASS" : "FAIL", v.detail.c_str(),
                static_cast<unsigned long long>(v.checked), secs);
    for (const auto& f : v.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  std::printf("%d of %d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
