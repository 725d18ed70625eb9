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

#include "witt/multi.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace witt {

namespace {

bool prime_less(const RingPtr& base, const Value& a, const Value& b) {
  if (base->kind() == RingKind::Integers) {
    int c = cmp(abs(a.integer()), abs(b.integer()));
    return c != 0 ? c < 0 : a.integer() < b.integer();
  }
  return a.fp_poly() < b.fp_poly();
}

bool associates(const RingPtr& base, const Value& a, const Value& b) {
  if (base->kind() == RingKind::Integers) return abs(a.integer()) == abs(b.integer());
  return a.fp_poly().monic() == b.fp_poly().monic();
}

std::string index_string(const MultiIndex& i) {
  std::string s = "(";
  for (std::size_t k = 0; k < i.size(); ++k) s += (k ? "," : "") + std::to_string(i[k]);
  return s + ")";
}

template <class F>
Value map_leaves(const Value& v, std::size_t depth, const F& f) {
  if (depth == 0) return f(v);
  ValueList out;
  for (const auto& x : v.list()) out.push_back(map_leaves(x, depth - 1, f));
  return out;
}

bool torsion_free_all(const MultiWittVector::Shape& s) {
  for (std::size_t a = 0; a < s.family.size(); ++a) {
    if (!s.alg->torsion_free(s.family.prime(a))) return false;
  }
  return true;
}

}  // namespace

PrimeFamily PrimeFamily::make(RingPtr base, std::vector<Value> primes) {
  PrimeFamily f;
  f.base_ = std::move(base);
  for (const auto& p : primes) residue_cardinality(f.base_, p);
  std::sort(primes.begin(), primes.end(),
            [&](const Value& a, const Value& b) { return prime_less(f.base_, a, b); });
  for (std::size_t i = 1; i < primes.size(); ++i) {
    if (associates(f.base_, primes[i - 1], primes[i])) {
      fail(ErrorCode::InvalidRing, "prime family repeats " + f.base_->format(primes[i]));
    }
  }
  for (const auto& p : primes) f.q_.push_back(residue_cardinality(f.base_, p).get_ui());
  f.primes_ = std::move(primes);
  return f;
}

std::size_t PrimeFamily::index_of(const Value& pi) const {
  for (std::size_t a = 0; a < primes_.size(); ++a) {
    if (primes_[a] == pi) return a;
  }
  fail(ErrorCode::InvalidRing, base_->format(pi) + " is not in the family " + to_string());
}

std::string PrimeFamily::to_string() const {
  std::string s = "{";
  for (std::size_t a = 0; a < primes_.size(); ++a) s += (a ? "," : "") + base_->format(primes_[a]);
  return s + "}";
}

std::vector<MultiIndex> index_box(const MultiIndex& n) {
  std::vector<MultiIndex> out;
  MultiIndex i(n.size(), 0);
  while (true) {
    out.push_back(i);
    std::size_t k = n.size();
    while (k > 0) {
      --k;
      if (i[k] < n[k]) {
        ++i[k];
        std::fill(i.begin() + static_cast<std::ptrdiff_t>(k) + 1, i.end(), 0);
        break;
      }
      if (k == 0) return out;
    }
    if (n.empty()) return out;
  }
}

const Ring& MultiWittVector::Shape::top() const { return *top_ptr(); }

RingPtr MultiWittVector::Shape::top_ptr() const {
  return levels.empty() ? alg->target() : RingPtr(levels.back());
}

AlgebraPtr MultiWittVector::Shape::algebra_at(std::size_t l) const {
  return l == 0 ? alg : levels[l - 1]->as_algebra();
}

MultiWittVector::ShapePtr MultiWittVector::make_shape(const PrimeFamily& family, const MultiIndex& n,
                                                      const AlgebraPtr& alg, std::vector<std::size_t> order) {
  if (n.size() != family.size()) fail(ErrorCode::IndexOutOfRange, "multi-index does not match the family");
  if (!alg->base()->same_as(*family.base())) {
    fail(ErrorCode::ContextMismatch, alg->name() + " is not an algebra over " + family.base()->name());
  }
  if (order.empty()) {
    order.resize(family.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  std::vector<std::size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    if (sorted[a] != a || sorted.size() != family.size()) {
      fail(ErrorCode::IndexOutOfRange, "nesting order must be a permutation of the family");
    }
  }
  auto s = std::make_shared<Shape>(Shape{family, n, order, alg, {}});
  for (std::size_t l = 0; l < order.size(); ++l) {
    const std::size_t a = order[l];
    auto ctx = WittContext::make(family.base(), family.prime(a), n[a]);
    s->levels.push_back(WittRing::make(ctx, s->algebra_at(l)));
  }
  return s;
}

MultiWittVector MultiWittVector::from_components(ShapePtr shape, const std::map<MultiIndex, Value>& comps) {
  const Shape& s = *shape;
  MultiIndex idx(s.family.size(), 0);
  auto rec = [&](auto& self, std::size_t depth) -> Value {
    if (depth == 0) {
      auto it = comps.find(idx);
      return it == comps.end() ? s.alg->target()->zero() : it->second;
    }
    const std::size_t a = s.order[depth - 1];
    ValueList xs;
    for (std::size_t k = 0; k <= s.n[a]; ++k) {
      idx[a] = k;
      xs.push_back(self(self, depth - 1));
    }
    idx[a] = 0;
    return xs;
  };
  Value v = rec(rec, s.order.size());
  return MultiWittVector(std::move(shape), std::move(v));
}

Value MultiWittVector::component(const MultiIndex& i) const {
  const Shape& s = *shape_;
  Value v = value_;
  for (std::size_t l = s.order.size(); l-- > 0;) {
    const std::size_t k = i.at(s.order[l]);
    if (k > s.n[s.order[l]]) fail(ErrorCode::IndexOutOfRange, "component " + index_string(i) + " out of range");
    Value next = v.list()[k];
    v = std::move(next);
  }
  return v;
}

std::map<MultiIndex, Value> MultiWittVector::components() const {
  std::map<MultiIndex, Value> out;
  for (const auto& i : index_box(shape_->n)) out.emplace(i, component(i));
  return out;
}

bool MultiWittVector::operator==(const MultiWittVector& o) const {
  const Shape& a = *shape_;
  const Shape& b = *o.shape_;
  if (!(a.family == b.family) || a.n != b.n || a.order != b.order || !a.alg->same_as(*b.alg)) return false;
  return a.top().equal(value_, o.value_);
}

std::string MultiWittVector::to_string() const { return shape_->top().format(value_); }

std::map<MultiIndex, Value> multi_ghost(const MultiWittVector& w) {
  const auto& s = *w.shape();
  std::map<MultiIndex, Value> out;
  MultiIndex idx(s.family.size(), 0);
  auto rec = [&](auto& self, std::size_t depth, const Value& v) -> void {
    if (depth == 0) {
      out[idx] = v;
      return;
    }
    const auto& ring = *s.levels[depth - 1];
    auto g = ghost(ring.wrap(v));
    const std::size_t a = s.order[depth - 1];
    for (std::size_t k = 0; k < g.entries().size(); ++k) {
      idx[a] = k;
      self(self, depth - 1, g.entries()[k]);
    }
    idx[a] = 0;
  };
  rec(rec, s.levels.size(), w.value());
  return out;
}

MultiWittVector multi_unghost(const MultiWittVector::ShapePtr& shape, const std::map<MultiIndex, Value>& g) {
  const auto& s = *shape;
  MultiIndex idx(s.family.size(), 0);
  auto rec = [&](auto& self, std::size_t depth) -> Value {
    if (depth == 0) {
      auto it = g.find(idx);
      if (it == g.end()) fail(ErrorCode::IndexOutOfRange, "missing ghost entry " + index_string(idx));
      return it->second;
    }
    const auto& ring = *s.levels[depth - 1];
    const std::size_t a = s.order[depth - 1];
    std::vector<Value> entries;
    for (std::size_t k = 0; k <= s.n[a]; ++k) {
      idx[a] = k;
      entries.push_back(self(self, depth - 1));
    }
    idx[a] = 0;
    return WittRing::unwrap(unghost(GhostVector(ring.context(), ring.algebra(), std::move(entries))));
  };
  return MultiWittVector(shape, rec(rec, s.levels.size()));
}

namespace {

void check_same(const MultiWittVector& a, const MultiWittVector& b) {
  const auto& x = *a.shape();
  const auto& y = *b.shape();
  if (!(x.family == y.family) || x.n != y.n || x.order != y.order || !x.alg->same_as(*y.alg)) {
    fail(ErrorCode::ContextMismatch, "multi-prime vectors of different shapes");
  }
}

}  // namespace

MultiWittVector multi_add(const MultiWittVector& a, const MultiWittVector& b) {
  check_same(a, b);
  return MultiWittVector(a.shape(), a.shape()->top().add(a.value(), b.value()));
}

MultiWittVector multi_mul(const MultiWittVector& a, const MultiWittVector& b) {
  check_same(a, b);
  return MultiWittVector(a.shape(), a.shape()->top().mul(a.value(), b.value()));
}

MultiWittVector multi_neg(const MultiWittVector& a) {
  return MultiWittVector(a.shape(), a.shape()->top().neg(a.value()));
}

MultiWittVector multi_teichmuller(const Value& a, const MultiWittVector::ShapePtr& shape) {
  Value v = a;
  for (const auto& level : shape->levels) {
    v = WittRing::unwrap(teichmuller(v, level->context(), level->algebra()));
  }
  return MultiWittVector(shape, std::move(v));
}

MultiWittVector multi_one(const MultiWittVector::ShapePtr& shape) {
  return multi_teichmuller(shape->alg->target()->one(), shape);
}

MultiWittVector reorder(const MultiWittVector& w, const std::vector<std::size_t>& order) {
  const auto& s = *w.shape();
  if (order == s.order) return w;
  auto target = MultiWittVector::make_shape(s.family, s.n, s.alg, order);
  if (torsion_free_all(s)) return multi_unghost(target, multi_ghost(w));
  const Cover* c = s.alg->cover();
  if (!c) fail(ErrorCode::TorsionNotSupported, "reordering over " + s.alg->name() + " needs a torsion-free cover");
  auto lifted_shape = MultiWittVector::make_shape(s.family, s.n, c->algebra, s.order);
  const std::size_t depth = s.levels.size();
  MultiWittVector lifted(lifted_shape,
                         map_leaves(w.value(), depth, [&](const Value& x) { return s.alg->lift_to_cover(x); }));
  auto moved_shape = MultiWittVector::make_shape(s.family, s.n, c->algebra, order);
  auto moved = multi_unghost(moved_shape, multi_ghost(lifted));
  return MultiWittVector(target,
                         map_leaves(moved.value(), depth, [&](const Value& x) { return s.alg->reduce_from_cover(x); }));
}

// ---- big Witt ---------------------------------------------------------------

MultiIndex TruncationSet::index_of(std::uint64_t d) const {
  if (N % d != 0) fail(ErrorCode::IndexOutOfRange, std::to_string(d) + " is not in the truncation set");
  MultiIndex i;
  for (std::size_t a = 0; a < family.size(); ++a) {
    const std::uint64_t p = family.prime(a).integer().get_ui();
    std::size_t e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    i.push_back(e);
  }
  return i;
}

std::uint64_t TruncationSet::divisor_of(const MultiIndex& i) const {
  std::uint64_t d = 1;
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t k = 0; k < i.at(a); ++k) d *= family.prime(a).integer().get_ui();
  }
  return d;
}

TruncationSet truncation_set_context(const std::set<std::uint64_t>& T) {
  if (T.empty() || *T.begin() == 0) fail(ErrorCode::NotDivisorClosed, "truncation sets are nonempty sets of positive integers");
  for (std::uint64_t m : T) {
    for (std::uint64_t d = 1; d * d <= m; ++d) {
      if (m % d) continue;
      if (!T.count(d) || !T.count(m / d)) {
        fail(ErrorCode::NotDivisorClosed, std::to_string(m) + " is in T but its divisor " +
                                              std::to_string(T.count(d) ? m / d : d) + " is not");
      }
    }
  }
  const std::uint64_t N = *T.rbegin();
  for (std::uint64_t m : T) {
    if (N % m != 0) {
      fail(ErrorCode::NotRectangular, "T is not the divisor set of a single integer (" + std::to_string(m) +
                                          " does not divide " + std::to_string(N) + ")");
    }
  }
  std::size_t count = 0;
  for (std::uint64_t d = 1; d <= N; ++d) count += N % d == 0;
  if (count != T.size()) fail(ErrorCode::NotRectangular, "T misses divisors of " + std::to_string(N));
  std::vector<Value> primes;
  MultiIndex n;
  std::uint64_t rest = N;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    if (rest % p) continue;
    std::size_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    primes.emplace_back(Integer(static_cast<unsigned long>(p)));
    n.push_back(e);
  }
  if (rest > 1) {
    primes.emplace_back(Integer(static_cast<unsigned long>(rest)));
    n.push_back(1);
  }
  return TruncationSet{{T.begin(), T.end()}, N, PrimeFamily::make(integers(), primes), n};
}

std::map<std::uint64_t, Value> classical_big_ghost(const Ring& A, const std::map<std::uint64_t, Value>& x,
                                                   const TruncationSet& T) {
  std::map<std::uint64_t, Value> w;
  for (std::uint64_t m : T.elements) {
    Value acc = A.zero();
    for (std::uint64_t d : T.elements) {
      if (m % d) continue;
      auto it = x.find(d);
      if (it == x.end()) fail(ErrorCode::IndexOutOfRange, "missing classical coordinate x_" + std::to_string(d));
      acc = A.add(acc, A.mul(A.from_integer(Integer(static_cast<unsigned long>(d))), A.pow(it->second, m / d)));
    }
    w.emplace(m, std::move(acc));
  }
  return w;
}

std::shared_ptr<const BigWittChange> big_witt_change(const TruncationSet& T) {
  static std::mutex mu;
  static std::map<std::uint64_t, std::shared_ptr<const BigWittChange>> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(T.N); it != memo.end()) return it->second;
  }
  auto change = std::make_shared<BigWittChange>();
  std::vector<std::string> xnames, ynames;
  for (std::uint64_t d : T.elements) xnames.push_back("x" + std::to_string(d));
  const auto box = index_box(T.n);
  for (const auto& i : box) {
    std::string name = "y";
    for (std::size_t k : i) name += std::to_string(k);
    ynames.push_back(name);
  }
  change->classical_ring = std::static_pointer_cast<const MultiPolyRing>(multi(integers(), xnames));
  change->nested_ring = std::static_pointer_cast<const MultiPolyRing>(multi(integers(), ynames));

  // Classical -> nested: unghost the classical ghost through the nesting.
  {
    const auto& S = *change->classical_ring;
    std::map<std::uint64_t, Value> x;
    for (std::size_t k = 0; k < T.elements.size(); ++k) x.emplace(T.elements[k], S.variable(k));
    std::map<MultiIndex, Value> g;
    for (auto& [m, v] : classical_big_ghost(S, x, T)) g.emplace(T.index_of(m), std::move(v));
    auto shape = MultiWittVector::make_shape(T.family, T.n, AlgebraStructure::make(integers(), change->classical_ring));
    change->nested_of_classical = multi_unghost(shape, g).components();
  }
  // Nested -> classical: x_m = (w_m - sum_{d | m, d < m} d x_d^{m/d}) / m.
  {
    const auto& S = *change->nested_ring;
    std::map<MultiIndex, Value> y;
    for (std::size_t k = 0; k < box.size(); ++k) y.emplace(box[k], S.variable(k));
    auto shape = MultiWittVector::make_shape(T.family, T.n, AlgebraStructure::make(integers(), change->nested_ring));
    auto g = multi_ghost(MultiWittVector::from_components(shape, y));
    for (std::uint64_t m : T.elements) {
      Value num = g.at(T.index_of(m));
      for (std::uint64_t d : T.elements) {
        if (d >= m || m % d) continue;
        num = S.sub(num, S.mul(S.from_integer(Integer(static_cast<unsigned long>(d))),
                               S.pow(change->classical_of_nested.at(d), m / d)));
      }
      auto x = S.exact_div(num, S.from_integer(Integer(static_cast<unsigned long>(m))));
      if (!x) fail(ErrorCode::InternalIntegrityError, "classical coordinate x_" + std::to_string(m) + " is not integral");
      change->classical_of_nested.emplace(m, std::move(*x));
    }
  }
  std::lock_guard lock(mu);
  return memo.emplace(T.N, change).first->second;
}

std::map<std::uint64_t, Value> to_classical(const MultiWittVector& w, const TruncationSet& T) {
  auto change = big_witt_change(T);
  std::vector<Value> images;
  for (const auto& i : index_box(T.n)) images.push_back(w.component(i));
  std::map<std::uint64_t, Value> out;
  for (const auto& [m, p] : change->classical_of_nested) {
    out.emplace(m, evaluate(*change->nested_ring, p, *w.shape()->alg, images));
  }
  return out;
}

MultiWittVector from_classical(const std::map<std::uint64_t, Value>& x, const TruncationSet& T, const AlgebraPtr& alg) {
  auto change = big_witt_change(T);
  std::vector<Value> images;
  for (std::uint64_t d : T.elements) images.push_back(x.at(d));
  std::map<MultiIndex, Value> comps;
  for (const auto& [i, p] : change->nested_of_classical) {
    comps.emplace(i, evaluate(*change->classical_ring, p, *alg, images));
  }
  return MultiWittVector::from_components(MultiWittVector::make_shape(T.family, T.n, alg), comps);
}

}  // namespace witt
