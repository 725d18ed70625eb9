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

#include "witt/delta.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>

#include "witt/parse.hpp"
#include "witt/rings.hpp"

namespace witt {

namespace {

const MultiPolyRing& as_multi(const RingPtr& r) { return static_cast<const MultiPolyRing&>(*r); }

Integer binomial(std::uint64_t n, std::uint64_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string fresh_name(const std::vector<std::string>& taken, std::string name) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end() || name == "t") name += "_";
  return name;
}

}  // namespace

FrobeniusLiftSpec FrobeniusLiftSpec::make(RingPtr base, std::vector<std::string> generators, std::vector<Lift> lifts,
                                          std::vector<Value> relations) {
  if (base->kind() != RingKind::Integers && base->kind() != RingKind::UnivariatePoly) {
    fail(ErrorCode::InvalidRing, "lift specs live over Z or F_p[t], not " + base->name());
  }
  FrobeniusLiftSpec s;
  s.base_ = base;
  s.generators_ = std::move(generators);
  s.ring_ = s.generators_.empty() ? base : multi(base, s.generators_);
  s.alg_ = AlgebraStructure::make(base, s.ring_);
  std::vector<Value> primes;
  for (const auto& l : lifts) primes.push_back(l.prime);
  s.family_ = PrimeFamily::make(base, primes);
  s.images_.resize(lifts.size());
  for (auto& l : lifts) {
    if (l.images.size() != s.generators_.size()) {
      fail(ErrorCode::InvalidRing, "psi_" + base->format(l.prime) + " needs one image per generator");
    }
    s.images_[s.family_.index_of(l.prime)] = std::move(l.images);
  }
  s.relations_ = std::move(relations);
  return s;
}

FrobeniusLiftSpec FrobeniusLiftSpec::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("lift spec: ") + e.what());
  }
  try {
    RingPtr base = parse_ring(j.at("base").get<std::string>());
    std::vector<std::string> gens = j.value("generators", std::vector<std::string>{});
    RingPtr ring = gens.empty() ? base : multi(base, gens);
    std::vector<Lift> lifts;
    const auto psi = j.value("psi", nlohmann::json::object());
    for (const auto& p : j.at("primes")) {
      const std::string key = p.is_string() ? p.get<std::string>() : p.dump();
      Lift l{parse_element(base, key).value(), {}};
      for (const auto& g : gens) {
        if (!psi.contains(key) || !psi.at(key).contains(g)) {
          fail(ErrorCode::ParseError, "lift spec: missing psi_" + key + "(" + g + ")");
        }
        l.images.push_back(parse_element(ring, psi.at(key).at(g).get<std::string>()).value());
      }
      lifts.push_back(std::move(l));
    }
    std::vector<Value> rels;
    for (const auto& r : j.value("relations", std::vector<std::string>{})) {
      rels.push_back(parse_element(ring, r).value());
    }
    return make(base, gens, std::move(lifts), std::move(rels));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("lift spec: ") + e.what());
  }
}

Value FrobeniusLiftSpec::psi(std::size_t alpha, const Value& a) const {
  if (generators_.empty()) return a;
  return evaluate(as_multi(ring_), a, *alg_, images_.at(alpha));
}

Value FrobeniusLiftSpec::psi(const MultiIndex& m, const Value& a) const {
  Value v = a;
  for (std::size_t alpha = 0; alpha < m.size(); ++alpha) {
    for (std::size_t k = 0; k < m[alpha]; ++k) v = psi(alpha, v);
  }
  return v;
}

FrobeniusLiftSpec FrobeniusLiftSpec::extended(const std::vector<std::string>& extra) const {
  std::vector<std::string> gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  auto ring = multi(base_, gens);
  auto alg = AlgebraStructure::make(base_, ring);
  const auto& m = as_multi(ring);
  std::vector<Value> vars;
  for (std::size_t i = 0; i < generators_.size(); ++i) vars.push_back(m.variable(i));
  auto embed = [&](const Value& a) {
    return generators_.empty() ? alg->map(a) : evaluate(as_multi(ring_), a, *alg, vars);
  };
  std::vector<Lift> lifts;
  for (std::size_t a = 0; a < family_.size(); ++a) {
    Lift l{family_.prime(a), {}};
    for (const auto& im : images_[a]) l.images.push_back(embed(im));
    for (std::size_t k = 0; k < extra.size(); ++k) {
      l.images.push_back(m.pow(m.variable(generators_.size() + k), family_.q(a)));
    }
    lifts.push_back(std::move(l));
  }
  std::vector<Value> rels;
  for (const auto& r : relations_) rels.push_back(embed(r));
  return make(base_, gens, std::move(lifts), std::move(rels));
}

Value FrobeniusLiftSpec::embed_into(const FrobeniusLiftSpec& ext, const Value& a) const {
  if (generators_.empty()) return ext.alg_->map(a);
  const auto& m = as_multi(ext.ring_);
  std::vector<Value> vars;
  for (std::size_t i = 0; i < generators_.size(); ++i) vars.push_back(m.variable(i));
  return evaluate(as_multi(ring_), a, *ext.alg_, vars);
}

std::string FrobeniusLiftSpec::to_string() const {
  std::string s = ring_->name();
  for (std::size_t a = 0; a < family_.size(); ++a) {
    s += ", psi_" + base_->format(family_.prime(a)) + ":";
    if (generators_.empty()) s += " id";
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      s += (j ? ", " : " ") + generators_[j] + " -> " + ring_->format(images_[a][j]);
    }
  }
  return s;
}

LiftCheck check_frobenius_lift(const FrobeniusLiftSpec& spec) {
  const Ring& A = *spec.ring();
  const auto& fam = spec.family();
  const auto& gens = spec.generators();
  if (spec.relations().size() > 1) {
    fail(ErrorCode::UnsupportedPresentation, "only free algebras or a single relation are supported");
  }
  for (const auto& f : spec.relations()) {
    for (std::size_t a = 0; a < fam.size(); ++a) {
      if (!A.exact_div(spec.psi(a, f), f)) {
        return {false, "psi_" + spec.base()->format(fam.prime(a)) + " does not preserve the relation " + A.format(f)};
      }
    }
  }
  for (std::size_t a = 0; a < fam.size(); ++a) {
    const Value pi = spec.algebra()->map(fam.prime(a));
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Value x = as_multi(spec.ring()).variable(j);
      const Value diff = A.sub(spec.images(a)[j], A.pow(x, fam.q(a)));
      if (!A.exact_div(diff, pi)) {
        return {false, "psi_" + spec.base()->format(fam.prime(a)) + "(" + gens[j] + ") = " +
                           A.format(spec.images(a)[j]) + " is not " + gens[j] + "^" + std::to_string(fam.q(a)) +
                           " mod " + spec.base()->format(fam.prime(a))};
      }
    }
  }
  for (std::size_t a = 0; a < fam.size(); ++a) {
    for (std::size_t b = a + 1; b < fam.size(); ++b) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!A.equal(spec.psi(a, spec.images(b)[j]), spec.psi(b, spec.images(a)[j]))) {
          return {false, "psi_" + spec.base()->format(fam.prime(a)) + " and psi_" + spec.base()->format(fam.prime(b)) +
                             " do not commute on " + gens[j]};
        }
      }
    }
  }
  return {};
}

Value delta_apply(const FrobeniusLiftSpec& spec, std::size_t alpha, const Value& a) {
  const Ring& A = *spec.ring();
  const auto& fam = spec.family();
  const Value diff = A.sub(spec.psi(alpha, a), A.pow(a, fam.q(alpha)));
  auto d = A.exact_div(diff, spec.algebra()->map(fam.prime(alpha)));
  if (!d) {
    fail(ErrorCode::LiftViolation, "psi_" + spec.base()->format(fam.prime(alpha)) + "(" + A.format(a) + ") - (" +
                                       A.format(a) + ")^" + std::to_string(fam.q(alpha)) + " is not divisible by " +
                                       spec.base()->format(fam.prime(alpha)));
  }
  return *d;
}

const Value& CPolynomials::c_pair(std::size_t alpha, std::size_t beta) const {
  for (const auto& [k, v] : pair) {
    if (k == std::make_pair(alpha, beta)) return v;
  }
  fail(ErrorCode::IndexOutOfRange, "no C polynomial for the pair (" + std::to_string(alpha) + "," +
                                       std::to_string(beta) + ")");
}

CPolynomials c_polynomials(const PrimeFamily& family) {
  const RingPtr& base = family.base();
  CPolynomials out;
  out.ring = std::static_pointer_cast<const MultiPolyRing>(multi(base, {"x", "y", "z"}));
  const MultiPolyRing& R = *out.ring;
  auto alg = AlgebraStructure::make(base, out.ring);
  const Value x = R.variable(0), y = R.variable(1), z = R.variable(2);
  auto divide = [&](const Value& a, const Value& b, const char* what) {
    auto d = R.exact_div(a, b);
    if (!d) fail(ErrorCode::InternalIntegrityError, std::string(what) + " has non-integral coefficients");
    return *d;
  };
  for (std::size_t a = 0; a < family.size(); ++a) {
    const std::uint64_t q = family.q(a);
    const Value pi = R.embed(family.prime(a));
    const Value num = R.sub(R.add(R.pow(x, q), R.pow(y, q)), R.pow(R.add(x, y), q));
    Value c = divide(num, pi, "C_alpha");
    // Binomial form, term by term.
    Value bin = R.zero();
    std::string text;
    for (std::uint64_t i = 1; i < q; ++i) {
      const Value coeff = R.from_integer(binomial(q, i));
      const Value term = R.mul(coeff, R.mul(R.pow(x, q - i), R.pow(y, i)));
      bin = R.sub(bin, divide(term, pi, "binomial term"));
      text += (i > 1 ? " " : "") + std::string("- (") + to_string(binomial(q, i)) + "/" + base->format(family.prime(a)) +
              ")*x^" + std::to_string(q - i) + "*y^" + std::to_string(i);
    }
    if (!R.equal(bin, c)) fail(ErrorCode::InternalIntegrityError, "binomial form of C_alpha disagrees");
    out.c.push_back(std::move(c));
    out.binomial_form.push_back(text.empty() ? "0" : text);
  }
  const Ring& B = *base;
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      const std::uint64_t qa = family.q(a), qb = family.q(b);
      const Value& pa = family.prime(a);
      const Value& pb = family.prime(b);
      const Value Pa = R.embed(pa), Pb = R.embed(pb);
      auto base_div = [&](const Value& u, const Value& v) {
        auto d = B.exact_div(u, v);
        if (!d) fail(ErrorCode::InternalIntegrityError, "C_{alpha,alpha'} has non-integral coefficients");
        return *d;
      };
      // delta_a(pi_b) / pi_b and delta_b(pi_a) / pi_a in R0.
      const Value da_pb = base_div(base_div(B.sub(pb, B.pow(pb, qa)), pa), pb);
      const Value db_pa = base_div(base_div(B.sub(pa, B.pow(pa, qb)), pb), pa);
      const Value t1 = divide(evaluate(R, out.c[b], *alg, {R.pow(x, qa), R.mul(Pa, y), z}), Pa, "C_{alpha,alpha'}");
      const Value t2 = divide(evaluate(R, out.c[a], *alg, {R.pow(x, qb), R.mul(Pb, z), y}), Pb, "C_{alpha,alpha'}");
      Value c = R.sub(t1, t2);
      c = R.sub(c, R.mul(R.embed(da_pb), R.pow(z, qa)));
      c = R.add(c, R.mul(R.embed(db_pa), R.pow(y, qb)));
      out.pair.push_back({{a, b}, std::move(c)});
    }
  }
  return out;
}

Value eval_c(const CPolynomials& c, std::size_t alpha, const AlgebraStructure& alg, const Value& a, const Value& b) {
  return evaluate(*c.ring, c.c.at(alpha), alg, {a, b, alg.target()->zero()});
}

Value eval_c_pair(const CPolynomials& c, std::size_t alpha, std::size_t beta, const AlgebraStructure& alg,
                  const Value& a, const Value& y, const Value& z) {
  return evaluate(*c.ring, c.c_pair(alpha, beta), alg, {a, y, z});
}

Value random_element(const FrobeniusLiftSpec& spec, std::mt19937_64& rng) {
  const Ring& B = *spec.base();
  auto small_base = [&](int bound, int max_degree) -> Value {
    if (B.kind() == RingKind::Integers) {
      return B.from_integer(std::uniform_int_distribution<int>(-bound, bound)(rng));
    }
    const auto p = static_cast<const UnivariatePolyRing&>(B).prime();
    std::vector<std::uint32_t> cs(static_cast<std::size_t>(max_degree) + 1);
    for (auto& c : cs) c = std::uniform_int_distribution<std::uint32_t>(0, p - 1)(rng);
    return FpPoly(p, cs);
  };
  const auto& gens = spec.generators();
  if (gens.empty()) return small_base(50, 3);
  const Ring& A = *spec.ring();
  const auto& m = as_multi(spec.ring());
  Value acc = A.zero();
  // Monomials of total degree <= 2.
  std::vector<Value> monos{A.one()};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    monos.push_back(m.variable(i));
    for (std::size_t j = i; j < gens.size(); ++j) monos.push_back(A.mul(m.variable(i), m.variable(j)));
  }
  for (const auto& mono : monos) acc = A.add(acc, A.mul(spec.algebra()->map(small_base(3, 1)), mono));
  return acc;
}

Report check_delta_axioms(const FrobeniusLiftSpec& spec, std::size_t samples, std::uint64_t seed) {
  const auto& fam = spec.family();
  const auto cp = c_polynomials(fam);
  const std::string tag = spec.to_string();
  Report report;

  // Symmetry and vanishing of C_alpha.
  {
    Claim c{"delta.c_symmetry", "C_alpha(x,y) = (x^q + y^q - (x+y)^q)/pi_alpha = C_alpha(y,x), C_alpha(x,0) = 0"};
    const auto& R = *cp.ring;
    auto alg = AlgebraStructure::make(spec.base(), cp.ring);
    for (std::size_t a = 0; a < fam.size(); ++a) {
      const Value swapped = evaluate(R, cp.c[a], *alg, {R.variable(1), R.variable(0), R.variable(2)});
      c.check(R.equal(swapped, cp.c[a]), "C_" + std::to_string(a) + " not symmetric");
      const Value zeroed = evaluate(R, cp.c[a], *alg, {R.variable(0), R.zero(), R.variable(2)});
      c.check(R.is_zero(zeroed), "C_" + std::to_string(a) + "(x,0) != 0");
    }
    report.push_back(std::move(c));
  }

  auto run = [&](const FrobeniusLiftSpec& s,
                 const std::function<std::pair<Value, Value>(std::size_t)>& pair_at, std::size_t count,
                 const std::string& suffix) {
    const Ring& A = *s.ring();
    const auto& alg = *s.algebra();
    Claim ax2{"delta.axiom2_sum." + suffix, "delta_alpha(a+b) = delta_alpha(a) + delta_alpha(b) + C_alpha(a,b)"};
    Claim ax3{"delta.axiom3_product." + suffix,
              "delta_alpha(ab) = delta_alpha(a)b^q + a^q delta_alpha(b) + pi_alpha delta_alpha(a)delta_alpha(b)"};
    Claim ax4{"delta.axiom4_commute." + suffix,
              "delta_alpha delta_alpha'(a) = delta_alpha' delta_alpha(a) + C_{alpha,alpha'}(a, delta_alpha(a), "
              "delta_alpha'(a))"};
    Claim rec{"delta.psi_reconstruct." + suffix, "psi_alpha(a) = a^q + pi_alpha delta_alpha(a)"};
    for (std::size_t k = 0; k < count; ++k) {
      auto [a, b] = pair_at(k);
      for (std::size_t al = 0; al < fam.size(); ++al) {
        const std::uint64_t q = fam.q(al);
        const Value pi = alg.map(fam.prime(al));
        const Value da = delta_apply(s, al, a), db = delta_apply(s, al, b);
        const std::string w = "[" + tag + "] alpha=" + spec.base()->format(fam.prime(al)) + " a=" + A.format(a) +
                              " b=" + A.format(b);
        const Value lhs2 = delta_apply(s, al, A.add(a, b));
        const Value rhs2 = A.add(A.add(da, db), eval_c(cp, al, alg, a, b));
        ax2.check(A.equal(lhs2, rhs2), w);
        const Value lhs3 = delta_apply(s, al, A.mul(a, b));
        const Value rhs3 =
            A.add(A.add(A.mul(da, A.pow(b, q)), A.mul(A.pow(a, q), db)), A.mul(pi, A.mul(da, db)));
        ax3.check(A.equal(lhs3, rhs3), w);
        rec.check(A.equal(s.psi(al, a), A.add(A.pow(a, q), A.mul(pi, da))), w);
        for (std::size_t be = al + 1; be < fam.size(); ++be) {
          const Value dba = delta_apply(s, be, a);
          const Value lhs4 = delta_apply(s, al, dba);
          const Value rhs4 = A.add(delta_apply(s, be, da), eval_c_pair(cp, al, be, alg, a, da, dba));
          ax4.check(A.equal(lhs4, rhs4), w + " beta=" + spec.base()->format(fam.prime(be)));
        }
      }
    }
    report.push_back(std::move(ax2));
    report.push_back(std::move(ax3));
    if (fam.size() > 1) report.push_back(std::move(ax4));
    report.push_back(std::move(rec));
  };

  // Axiom (1) on constants.
  {
    Claim c{"delta.axiom1_constants", "delta_alpha(r) = (r - r^q)/pi_alpha for r in R0"};
    const Ring& B = *spec.base();
    std::vector<Value> consts;
    if (B.kind() == RingKind::Integers) {
      for (int r = -20; r <= 20; ++r) consts.push_back(B.from_integer(r));
    } else {
      const auto p = static_cast<const UnivariatePolyRing&>(B).prime();
      for (std::uint32_t code = 0; code < p * p * p; ++code) {
        consts.push_back(FpPoly(p, {code % p, (code / p) % p, code / (p * p)}));
      }
    }
    for (std::size_t a = 0; a < fam.size(); ++a) {
      for (const auto& r : consts) {
        const Value expect = *B.exact_div(B.sub(r, B.pow(r, fam.q(a))), fam.prime(a));
        const Value got = delta_apply(spec, a, spec.algebra()->map(r));
        c.check(spec.ring()->equal(got, spec.algebra()->map(expect)), "r=" + B.format(r));
      }
    }
    report.push_back(std::move(c));
  }

  // Symbolic: generic low-degree inputs over A[u, v] with psi(u) = u^q, psi(v) = v^q.
  {
    const std::string u = fresh_name(spec.generators(), "u");
    const std::string v = fresh_name(spec.generators(), "v");
    const auto ext = spec.extended({u, v});
    const auto& m = as_multi(ext.ring());
    const Ring& A = *ext.ring();
    const std::size_t r = spec.generators().size();
    const Value U = m.variable(r), V = m.variable(r + 1);
    std::vector<Value> inputs{U, V, A.add(U, V), A.mul(U, V), A.add(U, A.one()), A.sub(V, A.from_integer(2))};
    if (spec.base()->kind() == RingKind::UnivariatePoly) inputs.push_back(A.mul(*A.generator("t"), U));
    for (std::size_t j = 0; j < r; ++j) {
      const Value g = m.variable(j);
      inputs.push_back(A.add(g, U));
      inputs.push_back(A.mul(g, V));
      inputs.push_back(A.add(A.mul(g, U), A.one()));
    }
    const std::size_t k = inputs.size();
    run(ext, [&](std::size_t i) { return std::make_pair(inputs[i / k], inputs[i % k]); }, k * k, "symbolic");
  }

  // Seeded samples in A.
  {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Value, Value>> pairs;
    for (std::size_t i = 0; i < samples; ++i) {
      Value a = random_element(spec, rng);
      Value b = random_element(spec, rng);
      pairs.emplace_back(std::move(a), std::move(b));
    }
    run(spec, [&](std::size_t i) { return pairs[i]; }, samples, "samples");
  }
  return report;
}

WittVector coaction(const FrobeniusLiftSpec& spec, std::size_t alpha, const Value& a, std::size_t n) {
  auto ctx = WittContext::make(spec.base(), spec.family().prime(alpha), n);
  std::vector<Value> g{a};
  for (std::size_t k = 1; k <= n; ++k) g.push_back(spec.psi(alpha, g.back()));
  try {
    return unghost(GhostVector(ctx, spec.algebra(), std::move(g)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CongruenceViolation) throw;
    fail(ErrorCode::LiftViolation, std::string("coaction: ") + e.what());
  }
}

MultiWittVector coaction(const FrobeniusLiftSpec& spec, const Value& a, const MultiIndex& n) {
  auto shape = MultiWittVector::make_shape(spec.family(), n, spec.algebra());
  std::map<MultiIndex, Value> g;
  for (const auto& m : index_box(n)) g.emplace(m, spec.psi(m, a));
  try {
    return multi_unghost(shape, g);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CongruenceViolation) throw;
    fail(ErrorCode::LiftViolation, std::string("coaction: ") + e.what());
  }
}

}  // namespace witt
