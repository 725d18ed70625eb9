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

#include "witt/fp_poly.hpp"

#include <algorithm>
#include <sstream>

#include "witt/error.hpp"

namespace witt {

namespace {

inline std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

inline std::uint32_t addmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t submod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

}  // namespace

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (r != 1) fail(ErrorCode::DivisionInexact, "element not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FpPoly::FpPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

FpPoly FpPoly::constant(std::uint32_t p, std::int64_t c) {
  std::int64_t r = c % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return FpPoly(p, {static_cast<std::uint32_t>(r)});
}

FpPoly FpPoly::monomial(std::uint32_t p, std::uint32_t c, std::size_t degree) {
  std::vector<std::uint32_t> v(degree + 1, 0);
  v[degree] = c % p;
  return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
  FpPoly r = *this;
  r += o;
  return r;
}

FpPoly& FpPoly::operator+=(const FpPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = addmod(c_[i], o.c_[i], p_);
  trim();
  return *this;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
  FpPoly r = *this;
  r -= o;
  return r;
}

FpPoly& FpPoly::operator-=(const FpPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = submod(c_[i], o.c_[i], p_);
  trim();
  return *this;
}

FpPoly FpPoly::operator-() const {
  FpPoly r(p_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] == 0 ? 0 : p_ - c_[i];
  return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
  if (is_zero() || o.is_zero()) return FpPoly(p_);
  std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  // Reduce lazily: products are < 2^62 and we fold every few additions.
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p_;
    }
  }
  FpPoly r(p_);
  r.c_.resize(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i]);
  r.trim();
  return r;
}

FpPoly FpPoly::scaled(std::uint32_t c) const {
  FpPoly r = *this;
  c %= p_;
  for (auto& x : r.c_) x = mulmod(x, c, p_);
  r.trim();
  return r;
}

bool FpPoly::operator<(const FpPoly& o) const noexcept {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
  if (d.is_zero()) fail(ErrorCode::DivisionInexact, "division by zero polynomial");
  FpPoly rem = *this;
  if (degree() < d.degree()) return {FpPoly(p_), rem};
  const std::uint32_t inv = inverse_mod(d.leading(), p_);
  const std::size_t dd = static_cast<std::size_t>(d.degree());
  std::vector<std::uint32_t> q(c_.size() - dd, 0);
  for (std::size_t k = c_.size(); k-- > dd;) {
    std::uint32_t lc = rem.c_[k];
    if (lc == 0) continue;
    std::uint32_t f = mulmod(lc, inv, p_);
    q[k - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem.c_[k - dd + j] = submod(rem.c_[k - dd + j], mulmod(f, d.c_[j], p_), p_);
    }
  }
  rem.trim();
  return {FpPoly(p_, std::move(q)), rem};
}

std::optional<FpPoly> FpPoly::exact_div(const FpPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

FpPoly FpPoly::frobenius() const {
  if (c_.empty()) return *this;
  FpPoly r(p_);
  r.c_.assign((c_.size() - 1) * p_ + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * p_] = c_[i];
  return r;
}

FpPoly FpPoly::pow(std::uint64_t e) const {
  // Write e in base p: f^e = prod (f^{p^i})^{d_i} and f^{p^i} is a substitution.
  FpPoly result = constant(p_, 1);
  FpPoly base = *this;
  while (e > 0) {
    std::uint64_t digit = e % p_;
    if (digit != 0) {
      FpPoly pw = constant(p_, 1);
      FpPoly b = base;
      std::uint64_t d = digit;
      while (d > 0) {
        if (d & 1) pw = pw * b;
        d >>= 1;
        if (d) b = b * b;
      }
      result = result * pw;
    }
    e /= p_;
    if (e) base = base.frobenius();
  }
  return result;
}

FpPoly FpPoly::pow_mod(std::uint64_t e, const FpPoly& m) const {
  FpPoly result = constant(p_, 1) % m;
  FpPoly b = *this % m;
  while (e > 0) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inverse_mod(leading(), p_));
}

FpPoly FpPoly::derivative() const {
  FpPoly r(p_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    r.c_[i - 1] = mulmod(c_[i], static_cast<std::uint32_t>(i % p_), p_);
  }
  r.trim();
  return r;
}

FpPoly FpPoly::gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::tuple<FpPoly, FpPoly, FpPoly> FpPoly::xgcd(const FpPoly& a, const FpPoly& b) {
  const std::uint32_t p = a.p_;
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = constant(p, 1), s1(p);
  FpPoly t0(p), t1 = constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  std::uint32_t inv = inverse_mod(r0.leading(), p);
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

bool FpPoly::is_irreducible() const {
  const long d = degree();
  if (d < 1) return false;
  if (d == 1) return true;
  // Enumerate every monic polynomial of degree k for 1 <= k <= d/2.
  for (long k = 1; k <= d / 2; ++k) {
    std::vector<std::uint32_t> digits(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<std::uint32_t> coeffs = digits;
      coeffs.push_back(1);
      FpPoly cand(p_, std::move(coeffs));
      if ((*this % cand).is_zero()) return false;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p_) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return true;
}

std::string FpPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c_[i];
      continue;
    }
    if (c_[i] != 1) os << c_[i] << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace witt
