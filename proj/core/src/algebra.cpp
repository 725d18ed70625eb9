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

#include "witt/algebra.hpp"

#include <map>

namespace witt {

AlgebraPtr AlgebraStructure::make(RingPtr base, RingPtr target, std::optional<Value> t_image) {
  switch (base->kind()) {
    case RingKind::Integers:
      if (t_image) fail(ErrorCode::InvalidRing, "a Z-algebra has no image of t");
      break;
    case RingKind::UnivariatePoly: {
      const auto& u = static_cast<const UnivariatePolyRing&>(*base);
      if (target->characteristic() != u.prime()) {
        fail(ErrorCode::InvalidRing, target->name() + " is not an algebra over " + base->name());
      }
      if (!t_image) {
        t_image = target->generator(u.var());
        if (!t_image && target->kind() == RingKind::PrimeField) t_image = target->zero();
        if (!t_image) {
          fail(ErrorCode::InvalidRing, "the image of " + u.var() + " in " + target->name() + " must be given");
        }
      }
      break;
    }
    default:
      fail(ErrorCode::InvalidRing, "the base ring must be Z or F_p[t], got " + base->name());
  }
  return AlgebraPtr(new AlgebraStructure(std::move(base), std::move(target), std::move(t_image)));
}

Value AlgebraStructure::map(const Value& r) const {
  if (!t_image_) return target_->from_integer(r.integer());
  const FpPoly& f = r.fp_poly();
  Value acc = target_->zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = target_->mul(acc, *t_image_);
    if (f.coeff(i)) {
      acc = target_->add(acc, target_->from_integer(Integer(static_cast<unsigned long>(f.coeff(i)))));
    }
  }
  return acc;
}

bool AlgebraStructure::torsion_free(const Value& pi) const {
  return target_->is_nonzerodivisor(map(pi));
}

const Cover* AlgebraStructure::cover() const {
  std::call_once(cover_once_, [this] {
    if (!target_->integer_terms(target_->zero())) return;
    auto c = std::make_unique<Cover>();
    c->generator_names = target_->variables();
    if (c->generator_names.empty()) {
      c->algebra = identity(base_);
    } else {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < c->generator_names.size(); ++i) names.push_back("u" + std::to_string(i));
      c->algebra = make(base_, multi(base_, names));
      for (const auto& g : c->generator_names) cover_images_.push_back(*target_->generator(g));
    }
    cover_ = std::move(c);
  });
  return cover_.get();
}

Value AlgebraStructure::lift_to_cover(const Value& a) const {
  const Cover* c = cover();
  if (!c) fail(ErrorCode::TorsionNotSupported, target_->name() + " has no torsion-free cover");
  const Ring& C = *c->algebra->target();
  auto terms = target_->integer_terms(a);
  Value acc = C.zero();
  for (const auto& t : *terms) {
    Value term = C.from_integer(t.coeff);
    if (!c->generator_names.empty()) {
      const auto& mp = static_cast<const MultiPolyRing&>(C);
      for (std::size_t v = 0; v < t.exponents.size(); ++v) {
        if (t.exponents[v]) term = C.mul(term, C.pow(mp.variable(v), t.exponents[v]));
      }
    }
    acc = C.add(acc, term);
  }
  return acc;
}

Value AlgebraStructure::reduce_from_cover(const Value& x) const {
  const Cover* c = cover();
  if (!c) fail(ErrorCode::TorsionNotSupported, target_->name() + " has no torsion-free cover");
  if (c->generator_names.empty()) return map(x);
  return evaluate(static_cast<const MultiPolyRing&>(*c->algebra->target()), x, *this, cover_images_);
}

std::string AlgebraStructure::name() const {
  std::string s = target_->name();
  if (t_image_ && !(target_->generator(static_cast<const UnivariatePolyRing&>(*base_).var()) == t_image_)) {
    s += " (t -> " + target_->format(*t_image_) + ")";
  }
  return s;
}

bool AlgebraStructure::same_as(const AlgebraStructure& o) const {
  if (this == &o) return true;
  return base_->same_as(*o.base_) && target_->same_as(*o.target_) && t_image_ == o.t_image_;
}

Integer residue_cardinality(const RingPtr& r0, const Value& pi) {
  if (r0->kind() == RingKind::Integers) {
    Integer a = abs(pi.integer());
    if (!is_prime(a)) fail(ErrorCode::NotPrimeElement, to_string(pi.integer()) + " is not prime in Z");
    return a;
  }
  if (r0->kind() == RingKind::UnivariatePoly) {
    const FpPoly& f = pi.fp_poly();
    if (f.degree() < 1 || !f.monic().is_irreducible()) {
      fail(ErrorCode::NotPrimeElement, r0->format(pi) + " is not irreducible in " + r0->name());
    }
    Integer q;
    mpz_ui_pow_ui(q.get_mpz_t(), f.prime(), static_cast<unsigned long>(f.degree()));
    return q;
  }
  fail(ErrorCode::InvalidRing, "contexts are defined over Z or F_p[t], not " + r0->name());
}

bool is_prime_element(const RingPtr& r0, const Value& pi) {
  try {
    residue_cardinality(r0, pi);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotPrimeElement) return false;
    throw;
  }
}

Value reduce_mod_power(const Value& a, const Value& pi, std::uint64_t k, const AlgebraStructure& alg) {
  const Ring& A = *alg.target();
  if (k == 0) return A.zero();
  return A.reduce_mod(a, A.pow(alg.map(pi), k));
}

namespace {

template <class P>
Value evaluate_impl(const P& f, const AlgebraStructure& alg, const std::vector<Value>& images) {
  const Ring& A = *alg.target();
  const std::size_t nv = f.nvars();
  // Powers of each variable, built in increasing exponent order.
  std::vector<std::map<Exponent, Value>> powers(nv);
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t v = 0; v < nv; ++v) {
      if (f.exps(i)[v]) powers[v].emplace(f.exps(i)[v], Value());
    }
  }
  for (std::size_t v = 0; v < nv; ++v) {
    Exponent prev = 0;
    Value cur = A.one();
    for (auto& [e, val] : powers[v]) {
      cur = prev == 0 ? A.pow(images[v], e) : A.mul(cur, A.pow(images[v], e - prev));
      prev = e;
      val = cur;
    }
  }
  Value acc = A.zero();
  for (std::size_t i = 0; i < f.size(); ++i) {
    Value term = alg.map(Value(f.coeff(i)));
    for (std::size_t v = 0; v < nv && !A.is_zero(term); ++v) {
      if (f.exps(i)[v]) term = A.mul(term, powers[v].at(f.exps(i)[v]));
    }
    acc = A.add(acc, term);
  }
  return acc;
}

}  // namespace

Value evaluate(const MultiPolyRing& src, const Value& f, const AlgebraStructure& alg,
               const std::vector<Value>& images) {
  if (!src.base()->same_as(*alg.base())) {
    fail(ErrorCode::ContextMismatch, src.name() + " is not a polynomial ring over " + alg.base()->name());
  }
  if (images.size() != src.nvars()) fail(ErrorCode::IndexOutOfRange, "wrong number of substitution values");
  if (const auto* z = std::get_if<ZPoly>(&f.rep)) return evaluate_impl(*z, alg, images);
  return evaluate_impl(f.ft_poly(), alg, images);
}

}  // namespace witt
