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

#include "witt/ring.hpp"

namespace witt {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionInexact: return "DivisionInexact";
    case ErrorCode::NotPrimeElement: return "NotPrimeElement";
    case ErrorCode::CongruenceViolation: return "CongruenceViolation";
    case ErrorCode::InternalIntegrityError: return "InternalIntegrityError";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::LengthZero: return "LengthZero";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::TorsionNotSupported: return "TorsionNotSupported";
    case ErrorCode::NotDivisorClosed: return "NotDivisorClosed";
    case ErrorCode::NotRectangular: return "NotRectangular";
    case ErrorCode::UnsupportedPresentation: return "UnsupportedPresentation";
    case ErrorCode::LiftViolation: return "LiftViolation";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::InvalidRing: return "InvalidRing";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

std::size_t& poly_term_limit() {
  thread_local std::size_t limit = 0;
  return limit;
}

std::uint64_t& poly_work_limit() {
  thread_local std::uint64_t limit = 0;
  return limit;
}

std::string to_string(const Integer& z) { return z.get_str(10); }

Integer CoeffDomain<Integer>::pow(const Integer& c, std::uint64_t e) const {
  Integer r;
  if (modulus != 0) {
    Integer ee(static_cast<unsigned long>(e));
    mpz_powm(r.get_mpz_t(), c.get_mpz_t(), ee.get_mpz_t(), modulus.get_mpz_t());
  } else {
    mpz_pow_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(e));
  }
  return r;
}

std::optional<Integer> CoeffDomain<Integer>::exact_div(const Integer& a, const Integer& b) const {
  if (modulus == 0) {
    if (sgn(b) == 0) return std::nullopt;
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  Integer inv;
  if (!mpz_invert(inv.get_mpz_t(), b.get_mpz_t(), modulus.get_mpz_t())) return std::nullopt;
  return mul(a, inv);
}

FpPoly CoeffDomain<FpPoly>::from_int(const Integer& v) const {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return FpPoly::constant(p, static_cast<std::int64_t>(r.get_ui()));
}

Value Ring::pow(const Value& a, std::uint64_t e) const {
  Value result = one();
  Value base = a;
  bool first = true;
  while (e > 0) {
    if (e & 1) {
      result = first ? base : mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

Value Ring::reduce_mod(const Value&, const Value&) const {
  fail(ErrorCode::Unsupported, "reduction modulo an ideal is not available in " + name());
}

std::optional<Value> Ring::generator(const std::string&) const { return std::nullopt; }

std::optional<std::vector<IntegerTerm>> Ring::integer_terms(const Value&) const {
  return std::nullopt;
}

void RingElement::check_same(const RingElement& o) const {
  if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_)) {
    fail(ErrorCode::ContextMismatch,
         "elements of different rings: " + (ring_ ? ring_->name() : "?") + " vs " +
             (o.ring_ ? o.ring_->name() : "?"));
  }
}

RingElement RingElement::operator+(const RingElement& o) const {
  check_same(o);
  return {ring_, ring_->add(v_, o.v_)};
}

RingElement RingElement::operator-(const RingElement& o) const {
  check_same(o);
  return {ring_, ring_->sub(v_, o.v_)};
}

RingElement RingElement::operator*(const RingElement& o) const {
  check_same(o);
  return {ring_, ring_->mul(v_, o.v_)};
}

bool RingElement::operator==(const RingElement& o) const {
  if (!ring_ || !o.ring_) return ring_ == o.ring_;
  return ring_->same_as(*o.ring_) && ring_->equal(v_, o.v_);
}

RingElement exact_div(const RingElement& a, const RingElement& b) {
  if (!a.ring()->same_as(*b.ring())) {
    fail(ErrorCode::ContextMismatch, "exact_div across rings");
  }
  if (b.is_zero()) fail(ErrorCode::DivisionInexact, "division by zero");
  auto q = a.ring()->exact_div(a.value(), b.value());
  if (!q) {
    fail(ErrorCode::DivisionInexact,
         a.to_string() + " is not divisible by " + b.to_string() + " in " + a.ring()->name());
  }
  return {a.ring(), std::move(*q)};
}

}  // namespace witt
