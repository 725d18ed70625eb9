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

#ifndef WITT_RINGS_HPP
#define WITT_RINGS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "witt/ring.hpp"

namespace witt {

/// The integers.
RingPtr integers();
/// Z/m for m >= 2.
RingPtr integers_mod(const Integer& m);
/// F_p; p must be prime.
RingPtr prime_field(const Integer& p);
/// F_p[var].
RingPtr univariate(std::uint32_t p, std::string var = "t");
/// F_p[var]/(modulus); `base` must be univariate and modulus nonconstant.
RingPtr quotient(const RingPtr& base, const FpPoly& modulus);
/// base[vars], base one of Z, F_p, F_p[t]. Variable names must be distinct.
RingPtr multi(const RingPtr& base, std::vector<std::string> vars);

/// Parses descriptors such as "Z", "Z/4", "F3", "F2[t]", "F2[t]/(t^2)",
/// "Z[x,y]", "F3[t][x]" and the base spelling "Fp[t]:3".
RingPtr parse_ring(std::string_view text);

bool is_prime(const Integer& n);

/// Terms of a polynomial value (ZPoly or FtPoly) in canonical order: the
/// coefficient as a value of the coefficient ring, and the exponent vector.
struct PolyTerm {
  Value coeff;
  std::vector<Exponent> exponents;
};
std::vector<PolyTerm> poly_terms(const Value& v);

class UnivariatePolyRing final : public Ring {
 public:
  UnivariatePolyRing(std::uint32_t p, std::string var) : p_(p), var_(std::move(var)) {}

  RingKind kind() const override { return RingKind::UnivariatePoly; }
  std::string name() const override;
  Value zero() const override { return FpPoly(p_); }
  Value one() const override { return FpPoly::constant(p_, 1); }
  Value from_integer(const Integer& n) const override;
  Value add(const Value& a, const Value& b) const override { return a.fp_poly() + b.fp_poly(); }
  Value sub(const Value& a, const Value& b) const override { return a.fp_poly() - b.fp_poly(); }
  Value neg(const Value& a) const override { return -a.fp_poly(); }
  Value mul(const Value& a, const Value& b) const override { return a.fp_poly() * b.fp_poly(); }
  Value pow(const Value& a, std::uint64_t e) const override { return a.fp_poly().pow(e); }
  std::optional<Value> exact_div(const Value& a, const Value& b) const override;
  Value reduce_mod(const Value& a, const Value& g) const override;
  Integer characteristic() const override { return p_; }
  bool is_domain() const override { return true; }
  std::optional<Value> generator(const std::string& name) const override;
  std::vector<std::string> variables() const override { return {var_}; }
  std::optional<std::vector<IntegerTerm>> integer_terms(const Value& a) const override;
  std::string format(const Value& a) const override { return a.fp_poly().to_string(var_); }

  std::uint32_t prime() const { return p_; }
  const std::string& var() const { return var_; }

 private:
  std::uint32_t p_;
  std::string var_;
};

class QuotientPolyRing final : public Ring {
 public:
  QuotientPolyRing(std::uint32_t p, std::string var, FpPoly modulus)
      : p_(p), var_(std::move(var)), modulus_(std::move(modulus)) {}

  RingKind kind() const override { return RingKind::QuotientPoly; }
  std::string name() const override;
  Value zero() const override { return FpPoly(p_); }
  Value one() const override { return FpPoly::constant(p_, 1) % modulus_; }
  Value from_integer(const Integer& n) const override;
  Value add(const Value& a, const Value& b) const override { return a.fp_poly() + b.fp_poly(); }
  Value sub(const Value& a, const Value& b) const override { return a.fp_poly() - b.fp_poly(); }
  Value neg(const Value& a) const override { return -a.fp_poly(); }
  Value mul(const Value& a, const Value& b) const override {
    return (a.fp_poly() * b.fp_poly()) % modulus_;
  }
  Value pow(const Value& a, std::uint64_t e) const override {
    return a.fp_poly().pow_mod(e, modulus_);
  }
  std::optional<Value> exact_div(const Value& a, const Value& b) const override;
  Value reduce_mod(const Value& a, const Value& g) const override;
  Integer characteristic() const override { return p_; }
  bool is_domain() const override { return modulus_.is_irreducible(); }
  bool is_nonzerodivisor(const Value& x) const override;
  std::optional<Value> generator(const std::string& name) const override;
  std::vector<std::string> variables() const override { return {var_}; }
  std::optional<std::vector<IntegerTerm>> integer_terms(const Value& a) const override;
  std::optional<std::vector<Value>> elements() const override;
  std::string format(const Value& a) const override { return a.fp_poly().to_string(var_); }

  std::uint32_t prime() const { return p_; }
  const std::string& var() const { return var_; }
  const FpPoly& modulus() const { return modulus_; }

 private:
  std::uint32_t p_;
  std::string var_;
  FpPoly modulus_;
};

// Polynomial ring in named variables over Z, F_p or F_p[t].
class MultiPolyRing : public Ring {
 public:
  RingKind kind() const override { return RingKind::MultiPoly; }
  std::vector<std::string> variables() const override { return vars_; }
  const RingPtr& base() const { return base_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& var_names() const { return vars_; }

  // Constant polynomial with the given base-ring value.
  virtual Value embed(const Value& base_value) const = 0;
  virtual Value variable(std::size_t index) const = 0;
  // Number of terms of an element.
  virtual std::size_t term_count(const Value& a) const = 0;

 protected:
  MultiPolyRing(RingPtr base, std::vector<std::string> vars)
      : base_(std::move(base)), vars_(std::move(vars)) {}

  RingPtr base_;
  std::vector<std::string> vars_;
};

}  // namespace witt

#endif  // WITT_RINGS_HPP
