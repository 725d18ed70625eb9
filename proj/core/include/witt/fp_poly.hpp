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

#ifndef WITT_FP_POLY_HPP
#define WITT_FP_POLY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace witt {

// Dense univariate polynomial over F_p, p < 2^31. Coefficients are stored
// low degree first with no trailing zeros, so the zero polynomial is empty.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(std::uint32_t p) : p_(p) {}
  FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  static FpPoly constant(std::uint32_t p, std::int64_t c);
  static FpPoly monomial(std::uint32_t p, std::uint32_t c, std::size_t degree);

  std::uint32_t prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  // Degree of the zero polynomial is -1.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  std::uint32_t coeff(std::size_t i) const noexcept {
    return i < c_.size() ? c_[i] : 0;
  }
  std::uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

  FpPoly operator+(const FpPoly& o) const;
  FpPoly operator-(const FpPoly& o) const;
  FpPoly operator-() const;
  FpPoly operator*(const FpPoly& o) const;
  FpPoly& operator+=(const FpPoly& o);
  FpPoly& operator-=(const FpPoly& o);
  FpPoly& operator*=(const FpPoly& o) { return *this = *this * o; }
  FpPoly scaled(std::uint32_t c) const;

  bool operator==(const FpPoly& o) const noexcept {
    return p_ == o.p_ && c_ == o.c_;
  }
  // Total order used for canonical sorting: degree, then coefficients from the top.
  bool operator<(const FpPoly& o) const noexcept;

  // Quotient and remainder; divisor must be nonzero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly& divisor) const;
  FpPoly operator%(const FpPoly& m) const { return divmod(m).second; }
  std::optional<FpPoly> exact_div(const FpPoly& divisor) const;

  // f^e; uses f^p = f(t^p) so large prime-power exponents stay cheap.
  FpPoly pow(std::uint64_t e) const;
  FpPoly pow_mod(std::uint64_t e, const FpPoly& m) const;
  // f(t^p), which equals f^p over F_p.
  FpPoly frobenius() const;
  FpPoly monic() const;
  FpPoly derivative() const;

  static FpPoly gcd(FpPoly a, FpPoly b);
  // Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
  static std::tuple<FpPoly, FpPoly, FpPoly> xgcd(const FpPoly& a, const FpPoly& b);

  // Irreducibility by trial division against every monic polynomial of
  // degree <= deg/2.
  bool is_irreducible() const;

  std::string to_string(const std::string& var) const;

 private:
  void trim();

  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> c_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace witt

#endif  // WITT_FP_POLY_HPP
