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

#ifndef WITT_SPARSE_POLY_HPP
#define WITT_SPARSE_POLY_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "witt/coeff_domain.hpp"
#include "witt/error.hpp"

namespace witt {

using Exponent = std::uint32_t;

// Upper bound on the number of terms any single polynomial product may
// produce on this thread; zero disables the check.
std::size_t& poly_term_limit();
// Upper bound on the number of term pairs one polynomial product may
// multiply on this thread; zero disables the check.
std::uint64_t& poly_work_limit();

// Graded lexicographic comparison: total degree first, then the first
// variable with differing exponent decides.
inline int grlex_compare(std::span<const Exponent> a, std::span<const Exponent> b) {
  std::uint64_t da = 0, db = 0;
  for (Exponent e : a) da += e;
  for (Exponent e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// Sparse multivariate polynomial with terms kept in descending grlex order,
// no zero coefficients. Exponents of all terms live in one flat buffer.
template <class C>
class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, C c, const CoeffDomain<C>& dom) {
    SparsePoly r(nvars);
    dom.normalize(c);
    if (!dom.is_zero(c)) {
      r.exps_.assign(nvars, 0);
      r.coeffs_.push_back(std::move(c));
    }
    return r;
  }

  static SparsePoly variable(std::size_t nvars, std::size_t index, const CoeffDomain<C>& dom) {
    SparsePoly r(nvars);
    r.exps_.assign(nvars, 0);
    r.exps_[index] = 1;
    r.coeffs_.push_back(dom.one());
    return r;
  }

  // Builds from arbitrary (exponents, coefficient) pairs; duplicates are summed.
  static SparsePoly from_terms(std::size_t nvars,
                               std::vector<std::pair<std::vector<Exponent>, C>> terms,
                               const CoeffDomain<C>& dom) {
    std::map<std::vector<Exponent>, C> acc;
    for (auto& [e, c] : terms) {
      auto it = acc.find(e);
      if (it == acc.end()) {
        acc.emplace(std::move(e), std::move(c));
      } else {
        dom.add_to(it->second, c);
      }
    }
    SparsePoly r(nvars);
    std::vector<std::pair<const std::vector<Exponent>*, C*>> order;
    for (auto& [e, c] : acc) {
      dom.normalize(c);
      if (!dom.is_zero(c)) order.emplace_back(&e, &c);
    }
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
      return grlex_compare(*x.first, *y.first) > 0;
    });
    for (auto& [e, c] : order) {
      r.exps_.insert(r.exps_.end(), e->begin(), e->end());
      r.coeffs_.push_back(std::move(*c));
    }
    return r;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const Exponent> exps(std::size_t i) const noexcept {
    return {exps_.data() + i * nvars_, nvars_};
  }
  const C& coeff(std::size_t i) const noexcept { return coeffs_[i]; }

  bool is_constant() const noexcept {
    if (coeffs_.empty()) return true;
    if (coeffs_.size() > 1) return false;
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
  }

  std::uint64_t total_degree() const noexcept {
    // Leading term has maximal degree in grlex.
    if (coeffs_.empty()) return 0;
    std::uint64_t d = 0;
    for (Exponent e : exps(0)) d += e;
    return d;
  }

  std::vector<Exponent> max_exponents() const {
    std::vector<Exponent> m(nvars_, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      for (std::size_t v = 0; v < nvars_; ++v) m[v] = std::max(m[v], exps_[i * nvars_ + v]);
    }
    return m;
  }

  bool operator==(const SparsePoly& o) const {
    return nvars_ == o.nvars_ && exps_ == o.exps_ && coeffs_ == o.coeffs_;
  }

  // Appends a term that must sort strictly after every existing term.
  void push_back_term(std::span<const Exponent> e, C c) {
    exps_.insert(exps_.end(), e.begin(), e.end());
    coeffs_.push_back(std::move(c));
  }

  std::vector<C>& mutable_coeffs() { return coeffs_; }

  // Drops zero coefficients after in-place coefficient edits.
  void prune(const CoeffDomain<C>& dom) {
    std::size_t out = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      dom.normalize(coeffs_[i]);
      if (dom.is_zero(coeffs_[i])) continue;
      if (out != i) {
        coeffs_[out] = std::move(coeffs_[i]);
        std::copy_n(exps_.begin() + i * nvars_, nvars_, exps_.begin() + out * nvars_);
      }
      ++out;
    }
    coeffs_.resize(out);
    exps_.resize(out * nvars_);
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<Exponent> exps_;
  std::vector<C> coeffs_;
};

namespace poly {

template <class C>
SparsePoly<C> neg(const SparsePoly<C>& a, const CoeffDomain<C>& dom) {
  SparsePoly<C> r = a;
  for (auto& c : r.mutable_coeffs()) c = dom.neg(c);
  r.prune(dom);
  return r;
}

template <class C>
SparsePoly<C> add(const SparsePoly<C>& a, const SparsePoly<C>& b, const CoeffDomain<C>& dom,
                  bool subtract = false) {
  SparsePoly<C> r(a.nvars());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp;
    if (i == a.size()) {
      cmp = -1;
    } else if (j == b.size()) {
      cmp = 1;
    } else {
      cmp = grlex_compare(a.exps(i), b.exps(j));
    }
    if (cmp > 0) {
      r.push_back_term(a.exps(i), a.coeff(i));
      ++i;
    } else if (cmp < 0) {
      r.push_back_term(b.exps(j), subtract ? dom.neg(b.coeff(j)) : b.coeff(j));
      ++j;
    } else {
      C c = a.coeff(i);
      if (subtract) {
        dom.add_to(c, dom.neg(b.coeff(j)));
      } else {
        dom.add_to(c, b.coeff(j));
      }
      dom.normalize(c);
      if (!dom.is_zero(c)) r.push_back_term(a.exps(i), std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

template <class C>
SparsePoly<C> sub(const SparsePoly<C>& a, const SparsePoly<C>& b, const CoeffDomain<C>& dom) {
  return add(a, b, dom, true);
}

template <class C>
SparsePoly<C> scale(const SparsePoly<C>& a, const C& c, const CoeffDomain<C>& dom) {
  SparsePoly<C> r = a;
  for (auto& x : r.mutable_coeffs()) x = dom.mul(x, c);
  r.prune(dom);
  return r;
}

// Multiplies by a single term; monomial orders are preserved under shifts.
template <class C>
SparsePoly<C> mul_term(const SparsePoly<C>& a, std::span<const Exponent> e, const C& c,
                       const CoeffDomain<C>& dom) {
  SparsePoly<C> r(a.nvars());
  std::vector<Exponent> buf(a.nvars());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto ae = a.exps(i);
    for (std::size_t v = 0; v < a.nvars(); ++v) buf[v] = ae[v] + e[v];
    C x = dom.mul(a.coeff(i), c);
    if (!dom.is_zero(x)) r.push_back_term(buf, std::move(x));
  }
  return r;
}

namespace detail {

using Packed = unsigned __int128;

inline std::uint64_t mix(Packed k) {
  std::uint64_t x = static_cast<std::uint64_t>(k) ^ (static_cast<std::uint64_t>(k >> 64) * 0x9e3779b97f4a7c15ULL);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

struct Packing {
  std::vector<unsigned> shift;  // bit offset of each variable, var 0 highest
  std::vector<unsigned> width;
  bool ok = false;
};

inline Packing make_packing(const std::vector<Exponent>& bound) {
  Packing p;
  unsigned total = 0;
  p.width.resize(bound.size());
  for (std::size_t v = 0; v < bound.size(); ++v) {
    p.width[v] = std::max(1u, static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(bound[v]))));
    total += p.width[v];
  }
  if (total > 127) return p;
  p.shift.resize(bound.size());
  unsigned off = total;
  for (std::size_t v = 0; v < bound.size(); ++v) {
    off -= p.width[v];
    p.shift[v] = off;
  }
  p.ok = true;
  return p;
}

inline Packed pack(std::span<const Exponent> e, const Packing& p) {
  Packed k = 0;
  for (std::size_t v = 0; v < e.size(); ++v) k |= static_cast<Packed>(e[v]) << p.shift[v];
  return k;
}

inline void unpack(Packed k, const Packing& p, Exponent* out) {
  for (std::size_t v = 0; v < p.shift.size(); ++v) {
    out[v] = static_cast<Exponent>((k >> p.shift[v]) & ((Packed(1) << p.width[v]) - 1));
  }
}

}  // namespace detail

template <class C>
SparsePoly<C> mul(const SparsePoly<C>& a, const SparsePoly<C>& b, const CoeffDomain<C>& dom) {
  const std::size_t nv = a.nvars();
  if (a.is_zero() || b.is_zero()) return SparsePoly<C>(nv);
  if (b.size() == 1) return mul_term(a, b.exps(0), b.coeff(0), dom);
  if (a.size() == 1) return mul_term(b, a.exps(0), a.coeff(0), dom);

  std::vector<Exponent> bound = a.max_exponents();
  std::vector<Exponent> mb = b.max_exponents();
  for (std::size_t v = 0; v < nv; ++v) bound[v] += mb[v];
  const std::size_t limit = poly_term_limit();
  if (const std::uint64_t work = poly_work_limit();
      work && static_cast<std::uint64_t>(a.size()) * b.size() > work) {
    fail(ErrorCode::ResourceLimit, "polynomial product work limit exceeded");
  }

  detail::Packing packing = detail::make_packing(bound);
  if (!packing.ok) {
    // Wide exponent vectors: ordered map fallback.
    std::vector<std::pair<std::vector<Exponent>, C>> terms;
    std::map<std::vector<Exponent>, C> acc;
    std::vector<Exponent> buf(nv);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t v = 0; v < nv; ++v) buf[v] = a.exps(i)[v] + b.exps(j)[v];
        auto it = acc.find(buf);
        if (it == acc.end()) {
          acc.emplace(buf, dom.mul(a.coeff(i), b.coeff(j)));
          if (limit && acc.size() > limit) fail(ErrorCode::ResourceLimit, "polynomial term limit exceeded");
        } else {
          dom.addmul(it->second, a.coeff(i), b.coeff(j));
        }
      }
    }
    for (auto& [e, c] : acc) terms.emplace_back(e, std::move(c));
    return SparsePoly<C>::from_terms(nv, std::move(terms), dom);
  }

  std::vector<detail::Packed> ka(a.size()), kb(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) ka[i] = detail::pack(a.exps(i), packing);
  for (std::size_t j = 0; j < b.size(); ++j) kb[j] = detail::pack(b.exps(j), packing);

  // Open addressing table from packed monomial to accumulator slot.
  std::size_t cap = std::bit_ceil(std::max<std::size_t>(16, 2 * (a.size() + b.size())));
  std::vector<std::uint32_t> table(cap, UINT32_MAX);
  std::vector<detail::Packed> keys;
  std::vector<C> acc;
  auto rehash = [&]() {
    cap *= 2;
    table.assign(cap, UINT32_MAX);
    for (std::uint32_t s = 0; s < keys.size(); ++s) {
      std::size_t h = detail::mix(keys[s]) & (cap - 1);
      while (table[h] != UINT32_MAX) h = (h + 1) & (cap - 1);
      table[h] = s;
    }
  };
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const detail::Packed k = ka[i] + kb[j];
      std::size_t h = detail::mix(k) & (cap - 1);
      while (true) {
        const std::uint32_t s = table[h];
        if (s == UINT32_MAX) {
          table[h] = static_cast<std::uint32_t>(keys.size());
          keys.push_back(k);
          acc.push_back(dom.zero());
          dom.addmul(acc.back(), a.coeff(i), b.coeff(j));
          if (2 * keys.size() > cap) rehash();
          if (limit && keys.size() > limit) fail(ErrorCode::ResourceLimit, "polynomial term limit exceeded");
          break;
        }
        if (keys[s] == k) {
          dom.addmul(acc[s], a.coeff(i), b.coeff(j));
          break;
        }
        h = (h + 1) & (cap - 1);
      }
    }
  }

  // Sort surviving slots by (degree desc, packed key desc); var 0 occupies the
  // highest bits so key order is lex order within a degree.
  std::vector<std::uint32_t> order;
  order.reserve(keys.size());
  std::vector<std::uint64_t> degree(keys.size(), 0);
  std::vector<Exponent> buf(nv);
  for (std::uint32_t s = 0; s < keys.size(); ++s) {
    dom.normalize(acc[s]);
    if (dom.is_zero(acc[s])) continue;
    detail::unpack(keys[s], packing, buf.data());
    degree[s] = std::accumulate(buf.begin(), buf.end(), std::uint64_t{0});
    order.push_back(s);
  }
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    if (degree[x] != degree[y]) return degree[x] > degree[y];
    return keys[x] > keys[y];
  });
  SparsePoly<C> r(nv);
  for (std::uint32_t s : order) {
    detail::unpack(keys[s], packing, buf.data());
    r.push_back_term(buf, std::move(acc[s]));
  }
  return r;
}

// p-th power in characteristic p: coefficients and exponents map independently.
template <class C>
SparsePoly<C> frobenius(const SparsePoly<C>& a, std::uint64_t p, const CoeffDomain<C>& dom) {
  SparsePoly<C> r(a.nvars());
  std::vector<Exponent> buf(a.nvars());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t v = 0; v < a.nvars(); ++v) {
      std::uint64_t e = static_cast<std::uint64_t>(a.exps(i)[v]) * p;
      if (e > UINT32_MAX) fail(ErrorCode::ResourceLimit, "exponent overflow");
      buf[v] = static_cast<Exponent>(e);
    }
    r.push_back_term(buf, dom.frobenius(a.coeff(i)));
  }
  return r;
}

template <class C>
SparsePoly<C> pow(const SparsePoly<C>& a, std::uint64_t e, const CoeffDomain<C>& dom) {
  const std::size_t nv = a.nvars();
  if (e == 0) return SparsePoly<C>::constant(nv, dom.one(), dom);
  if (a.is_zero()) return a;
  if (a.size() == 1) {
    std::vector<Exponent> buf(nv);
    for (std::size_t v = 0; v < nv; ++v) {
      std::uint64_t x = static_cast<std::uint64_t>(a.exps(0)[v]) * e;
      if (x > UINT32_MAX) fail(ErrorCode::ResourceLimit, "exponent overflow");
      buf[v] = static_cast<Exponent>(x);
    }
    SparsePoly<C> r(nv);
    C c = dom.pow(a.coeff(0), e);
    dom.normalize(c);
    if (!dom.is_zero(c)) r.push_back_term(buf, std::move(c));
    return r;
  }
  auto binary = [&](SparsePoly<C> base, std::uint64_t k) {
    SparsePoly<C> result = SparsePoly<C>::constant(nv, dom.one(), dom);
    bool first = true;
    while (k > 0) {
      if (k & 1) {
        result = first ? base : mul(result, base, dom);
        first = false;
      }
      k >>= 1;
      if (k) base = mul(base, base, dom);
    }
    return result;
  };
  const std::uint64_t p = dom.characteristic();
  if (p == 0 || e < p) return binary(a, e);
  SparsePoly<C> result = SparsePoly<C>::constant(nv, dom.one(), dom);
  SparsePoly<C> base = a;
  while (e > 0) {
    const std::uint64_t digit = e % p;
    if (digit) result = mul(result, binary(base, digit), dom);
    e /= p;
    if (e) base = frobenius(base, p, dom);
  }
  return result;
}

template <class C>
std::optional<SparsePoly<C>> exact_div_coeff(const SparsePoly<C>& a, const C& c,
                                             const CoeffDomain<C>& dom) {
  SparsePoly<C> r = a;
  for (auto& x : r.mutable_coeffs()) {
    auto q = dom.exact_div(x, c);
    if (!q) return std::nullopt;
    x = std::move(*q);
  }
  r.prune(dom);
  return r;
}

// Exact division by leading-term reduction; nullopt when b does not divide a.
template <class C>
std::optional<SparsePoly<C>> exact_div(const SparsePoly<C>& a, const SparsePoly<C>& b,
                                       const CoeffDomain<C>& dom) {
  if (b.is_zero()) return std::nullopt;
  if (b.is_constant()) return exact_div_coeff(a, b.coeff(0), dom);
  const std::size_t nv = a.nvars();
  SparsePoly<C> rem = a;
  std::vector<std::pair<std::vector<Exponent>, C>> quot;
  std::vector<Exponent> e(nv);
  while (!rem.is_zero()) {
    auto lr = rem.exps(0);
    auto lb = b.exps(0);
    for (std::size_t v = 0; v < nv; ++v) {
      if (lr[v] < lb[v]) return std::nullopt;
      e[v] = lr[v] - lb[v];
    }
    auto c = dom.exact_div(rem.coeff(0), b.coeff(0));
    if (!c) return std::nullopt;
    rem = sub(rem, mul_term(b, e, *c, dom), dom);
    quot.emplace_back(e, std::move(*c));
  }
  return SparsePoly<C>::from_terms(nv, std::move(quot), dom);
}

// Re-indexes variables: new variable map[v] receives old variable v. Old
// variables mapped to npos must not occur.
template <class C>
SparsePoly<C> remap(const SparsePoly<C>& a, std::size_t new_nvars,
                    const std::vector<std::size_t>& map, const CoeffDomain<C>& dom) {
  std::vector<std::pair<std::vector<Exponent>, C>> terms;
  terms.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Exponent> e(new_nvars, 0);
    for (std::size_t v = 0; v < a.nvars(); ++v) {
      Exponent x = a.exps(i)[v];
      if (x == 0) continue;
      if (map[v] == static_cast<std::size_t>(-1)) {
        fail(ErrorCode::InternalIntegrityError, "remap drops a variable that occurs");
      }
      e[map[v]] += x;
    }
    terms.emplace_back(std::move(e), a.coeff(i));
  }
  return SparsePoly<C>::from_terms(new_nvars, std::move(terms), dom);
}

}  // namespace poly
}  // namespace witt

#endif  // WITT_SPARSE_POLY_HPP
