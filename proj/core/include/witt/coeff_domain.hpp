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

#ifndef WITT_COEFF_DOMAIN_HPP
#define WITT_COEFF_DOMAIN_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "witt/fp_poly.hpp"

namespace witt {

using Integer = mpz_class;

std::string to_string(const Integer& z);

// Coefficient arithmetic used by SparsePoly. Two domains exist: integers
// (optionally reduced modulo a prime) and F_p[t].
template <class C>
struct CoeffDomain;

template <>
struct CoeffDomain<Integer> {
  // Zero means the coefficients live in Z; otherwise in Z/modulus, modulus prime.
  Integer modulus = 0;

  Integer zero() const { return 0; }
  Integer one() const { return modulus == 1 ? Integer(0) : Integer(1); }
  Integer from_int(const Integer& v) const {
    Integer r = v;
    normalize(r);
    return r;
  }
  bool is_zero(const Integer& c) const { return sgn(c) == 0; }
  void normalize(Integer& c) const {
    if (modulus != 0) {
      mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
    }
  }
  Integer neg(const Integer& c) const {
    Integer r = -c;
    normalize(r);
    return r;
  }
  Integer mul(const Integer& a, const Integer& b) const {
    Integer r = a * b;
    normalize(r);
    return r;
  }
  // acc += a * b, left unnormalized until normalize() is called.
  void addmul(Integer& acc, const Integer& a, const Integer& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void add_to(Integer& acc, const Integer& a) const { acc += a; }
  Integer pow(const Integer& c, std::uint64_t e) const;
  std::uint64_t characteristic() const {
    return modulus == 0 ? 0 : modulus.get_ui();
  }
  // c^p for characteristic p; identity on F_p.
  Integer frobenius(const Integer& c) const { return c; }
  std::optional<Integer> exact_div(const Integer& a, const Integer& b) const;
  std::string format(const Integer& c) const { return to_string(c); }
  bool operator==(const CoeffDomain& o) const { return modulus == o.modulus; }
};

template <>
struct CoeffDomain<FpPoly> {
  std::uint32_t p = 2;
  std::string var = "t";

  FpPoly zero() const { return FpPoly(p); }
  FpPoly one() const { return FpPoly::constant(p, 1); }
  FpPoly from_int(const Integer& v) const;
  bool is_zero(const FpPoly& c) const { return c.is_zero(); }
  void normalize(FpPoly&) const {}
  FpPoly neg(const FpPoly& c) const { return -c; }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const { return a * b; }
  void addmul(FpPoly& acc, const FpPoly& a, const FpPoly& b) const { acc += a * b; }
  void add_to(FpPoly& acc, const FpPoly& a) const { acc += a; }
  FpPoly pow(const FpPoly& c, std::uint64_t e) const { return c.pow(e); }
  std::uint64_t characteristic() const { return p; }
  FpPoly frobenius(const FpPoly& c) const { return c.frobenius(); }
  std::optional<FpPoly> exact_div(const FpPoly& a, const FpPoly& b) const {
    if (b.is_zero()) return std::nullopt;
    return a.exact_div(b);
  }
  std::string format(const FpPoly& c) const { return c.to_string(var); }
  bool operator==(const CoeffDomain& o) const { return p == o.p && var == o.var; }
};

}  // namespace witt

#endif  // WITT_COEFF_DOMAIN_HPP
