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

#include "witt/witt_vector.hpp"

namespace witt {

namespace {

void check_same(const WittVector& a, const WittVector& b) {
  if (!(a.context() == b.context()) || !a.algebra()->same_as(*b.algebra())) {
    fail(ErrorCode::ContextMismatch, "Witt vectors over " + a.context().describe() + " / " + a.algebra()->name() +
                                         " and " + b.context().describe() + " / " + b.algebra()->name());
  }
}

std::string join(const Ring& r, const std::vector<Value>& xs, char open, char close) {
  std::string s(1, open);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += r.format(xs[i]);
  }
  return s + close;
}

// Ghost entries 0..n of components xs in A.
std::vector<Value> ghost_entries(const WittContext& ctx, const AlgebraStructure& alg, const std::vector<Value>& xs) {
  const Ring& A = *alg.target();
  const Value pi = alg.map(ctx.pi());
  std::vector<Value> pi_pow{A.one()};
  std::vector<Value> pw;  // pw[i] = x_i^{q^{k-i}}
  std::vector<Value> out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    for (auto& v : pw) v = A.pow(v, ctx.q());
    pw.push_back(xs[k]);
    if (k > 0) pi_pow.push_back(A.mul(pi_pow.back(), pi));
    Value acc = A.zero();
    for (std::size_t i = 0; i <= k; ++i) acc = A.add(acc, A.mul(pi_pow[i], pw[i]));
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Value> unghost_entries(const WittContext& ctx, const AlgebraStructure& alg, const std::vector<Value>& g) {
  const Ring& A = *alg.target();
  const Value pi = alg.map(ctx.pi());
  std::vector<Value> pi_pow{A.one()};
  std::vector<Value> pw, xs;
  for (std::size_t k = 0; k < g.size(); ++k) {
    for (auto& v : pw) v = A.pow(v, ctx.q());
    if (k > 0) {
      pw.push_back(A.pow(xs[k - 1], ctx.q()));
      pi_pow.push_back(A.mul(pi_pow.back(), pi));
    }
    Value num = g[k];
    for (std::size_t i = 0; i < k; ++i) num = A.sub(num, A.mul(pi_pow[i], pw[i]));
    auto x = A.exact_div(num, pi_pow[k]);
    if (!x) {
      fail(ErrorCode::CongruenceViolation, "ghost vector " + join(A, g, '<', '>') + " is not in the image: " +
                                               A.format(num) + " is not divisible by pi^" + std::to_string(k));
    }
    xs.push_back(std::move(*x));
  }
  return xs;
}

WittVector to_cover(const WittVector& w) {
  const Cover* c = w.algebra()->cover();
  std::vector<Value> xs;
  for (const auto& x : w.components()) xs.push_back(w.algebra()->lift_to_cover(x));
  return WittVector(w.context(), c->algebra, std::move(xs));
}

WittVector from_cover(const WittVector& w, const AlgebraPtr& alg) {
  std::vector<Value> xs;
  for (const auto& x : w.components()) xs.push_back(alg->reduce_from_cover(x));
  return WittVector(w.context(), alg, std::move(xs));
}

template <class Combine>
WittVector ghost_binary(const WittVector& a, const WittVector& b, Combine combine) {
  const Ring& A = *a.ring();
  auto ga = ghost_entries(a.context(), *a.algebra(), a.components());
  auto gb = ghost_entries(a.context(), *a.algebra(), b.components());
  for (std::size_t k = 0; k < ga.size(); ++k) ga[k] = combine(A, ga[k], gb[k]);
  try {
    return WittVector(a.context(), a.algebra(), unghost_entries(a.context(), *a.algebra(), ga));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CongruenceViolation) fail(ErrorCode::InternalIntegrityError, e.what());
    throw;
  }
}

WittVector binary_op(const WittVector& a, const WittVector& b, WittOp op, EvalPath path) {
  check_same(a, b);
  auto combine = [op](const Ring& A, const Value& x, const Value& y) {
    return op == WittOp::Sum ? A.add(x, y) : A.mul(x, y);
  };
  switch (resolve_path(a.context(), *a.algebra(), path)) {
    case EvalPath::Ghost:
      return ghost_binary(a, b, combine);
    case EvalPath::Cover:
      return from_cover(ghost_binary(to_cover(a), to_cover(b), combine), a.algebra());
    default: {
      auto s = structural_polys(a.context(), op);
      return apply_structural(*s, a, &b);
    }
  }
}

WittVector ghost_frobenius(const WittVector& w) {
  auto g = ghost_entries(w.context(), *w.algebra(), w.components());
  g.erase(g.begin());
  WittContext ctx = w.context().with_length(w.n() - 1);
  try {
    return WittVector(ctx, w.algebra(), unghost_entries(ctx, *w.algebra(), g));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CongruenceViolation) fail(ErrorCode::InternalIntegrityError, e.what());
    throw;
  }
}

WittVector ghost_negate(const WittVector& w) {
  const Ring& A = *w.ring();
  auto g = ghost_entries(w.context(), *w.algebra(), w.components());
  for (auto& x : g) x = A.neg(x);
  return WittVector(w.context(), w.algebra(), unghost_entries(w.context(), *w.algebra(), g));
}

}  // namespace

WittVector::WittVector(WittContext ctx, AlgebraPtr alg, std::vector<Value> components)
    : ctx_(std::move(ctx)), alg_(std::move(alg)), comps_(std::move(components)) {
  if (comps_.size() != ctx_.n() + 1) {
    fail(ErrorCode::IndexOutOfRange, "W_" + std::to_string(ctx_.n()) + " needs " + std::to_string(ctx_.n() + 1) +
                                         " components, got " + std::to_string(comps_.size()));
  }
  if (!alg_->base()->same_as(*ctx_.base())) {
    fail(ErrorCode::ContextMismatch, alg_->name() + " is not an algebra over " + ctx_.base()->name());
  }
}

bool WittVector::is_zero() const {
  for (const auto& x : comps_) {
    if (!ring()->is_zero(x)) return false;
  }
  return true;
}

bool WittVector::operator==(const WittVector& o) const {
  if (!(ctx_ == o.ctx_) || !alg_->same_as(*o.alg_)) return false;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (!ring()->equal(comps_[i], o.comps_[i])) return false;
  }
  return true;
}

std::string WittVector::to_string() const { return join(*ring(), comps_, '(', ')'); }

GhostVector::GhostVector(WittContext ctx, AlgebraPtr alg, std::vector<Value> entries)
    : ctx_(std::move(ctx)), alg_(std::move(alg)), entries_(std::move(entries)) {
  if (entries_.size() != ctx_.n() + 1) {
    fail(ErrorCode::IndexOutOfRange, "ghost vector of W_" + std::to_string(ctx_.n()) + " needs " +
                                         std::to_string(ctx_.n() + 1) + " entries");
  }
}

bool GhostVector::operator==(const GhostVector& o) const {
  if (!(ctx_ == o.ctx_) || !alg_->same_as(*o.alg_)) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!alg_->target()->equal(entries_[i], o.entries_[i])) return false;
  }
  return true;
}

std::string GhostVector::to_string() const { return join(*alg_->target(), entries_, '<', '>'); }

EvalPath resolve_path(const WittContext& ctx, const AlgebraStructure& alg, EvalPath path) {
  switch (path) {
    case EvalPath::Auto:
      if (alg.torsion_free(ctx.pi())) return EvalPath::Ghost;
      if (alg.cover()) return EvalPath::Cover;
      return EvalPath::Structural;
    case EvalPath::Ghost:
      if (!alg.torsion_free(ctx.pi())) {
        fail(ErrorCode::TorsionNotSupported, alg.name() + " has pi-torsion; ghost arithmetic is not available");
      }
      return path;
    case EvalPath::Cover:
      if (!alg.cover()) fail(ErrorCode::TorsionNotSupported, alg.name() + " has no torsion-free cover");
      return path;
    case EvalPath::Structural:
      return path;
  }
  return path;
}

GhostVector ghost(const WittVector& w) {
  return GhostVector(w.context(), w.algebra(), ghost_entries(w.context(), *w.algebra(), w.components()));
}

WittVector unghost(const GhostVector& g) {
  if (!g.algebra()->torsion_free(g.context().pi())) {
    fail(ErrorCode::TorsionNotSupported, "unghost needs a torsion-free algebra, got " + g.algebra()->name());
  }
  return WittVector(g.context(), g.algebra(), unghost_entries(g.context(), *g.algebra(), g.entries()));
}

WittVector zero_vector(const WittContext& ctx, const AlgebraPtr& alg) {
  return WittVector(ctx, alg, std::vector<Value>(ctx.n() + 1, alg->target()->zero()));
}

WittVector one_vector(const WittContext& ctx, const AlgebraPtr& alg) {
  return teichmuller(alg->target()->one(), ctx, alg);
}

WittVector scalar(const Value& r, const WittContext& ctx, const AlgebraPtr& alg) {
  auto self = AlgebraStructure::identity(ctx.base());
  auto xs = unghost_entries(ctx, *self, std::vector<Value>(ctx.n() + 1, r));
  for (auto& x : xs) x = alg->map(x);
  return WittVector(ctx, alg, std::move(xs));
}

WittVector from_components(const WittContext& ctx, const AlgebraPtr& alg, const std::vector<RingElement>& xs) {
  std::vector<Value> vs;
  for (const auto& x : xs) {
    if (!x.ring()->same_as(*alg->target())) {
      fail(ErrorCode::ContextMismatch, "component in " + x.ring()->name() + ", expected " + alg->target()->name());
    }
    vs.push_back(x.value());
  }
  return WittVector(ctx, alg, std::move(vs));
}

WittVector add(const WittVector& a, const WittVector& b, EvalPath path) {
  // Over F_p[t] the q-power map is additive, so addition is componentwise.
  if (a.context().positive_characteristic() && path == EvalPath::Auto) {
    check_same(a, b);
    std::vector<Value> xs;
    for (std::size_t i = 0; i <= a.n(); ++i) xs.push_back(a.ring()->add(a.components()[i], b.components()[i]));
    return WittVector(a.context(), a.algebra(), std::move(xs));
  }
  return binary_op(a, b, WittOp::Sum, path);
}

WittVector sub(const WittVector& a, const WittVector& b, EvalPath path) {
  return add(a, negate(b, path), path);
}

WittVector mul(const WittVector& a, const WittVector& b, EvalPath path) {
  return binary_op(a, b, WittOp::Product, path);
}

WittVector negate(const WittVector& a, EvalPath path) {
  if ((a.context().positive_characteristic() || a.context().q() % 2 == 1) && path == EvalPath::Auto) {
    // Odd q or characteristic p: (-x)^q = -x^q, so negation is componentwise.
    std::vector<Value> xs;
    for (const auto& x : a.components()) xs.push_back(a.ring()->neg(x));
    return WittVector(a.context(), a.algebra(), std::move(xs));
  }
  switch (resolve_path(a.context(), *a.algebra(), path)) {
    case EvalPath::Ghost:
      return ghost_negate(a);
    case EvalPath::Cover:
      return from_cover(ghost_negate(to_cover(a)), a.algebra());
    default:
      return apply_structural(*structural_polys(a.context(), WittOp::Negation), a, nullptr);
  }
}

WittVector pow(const WittVector& a, std::uint64_t e, EvalPath path) {
  WittVector result = one_vector(a.context(), a.algebra());
  WittVector base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base, path);
    e >>= 1;
    if (e) base = mul(base, base, path);
  }
  return result;
}

WittVector frobenius(const WittVector& w, EvalPath path) {
  if (w.n() == 0) fail(ErrorCode::LengthZero, "Frobenius W_0 -> W_{-1} is undefined");
  switch (resolve_path(w.context(), *w.algebra(), path)) {
    case EvalPath::Ghost:
      return ghost_frobenius(w);
    case EvalPath::Cover:
      return from_cover(ghost_frobenius(to_cover(w)), w.algebra());
    default:
      return apply_structural(*structural_polys(w.context(), WittOp::Frobenius), w, nullptr);
  }
}

WittVector teichmuller(const Value& a, const WittContext& ctx, const AlgebraPtr& alg) {
  std::vector<Value> xs(ctx.n() + 1, alg->target()->zero());
  xs[0] = a;
  return WittVector(ctx, alg, std::move(xs));
}

WittVector teich_scale(const Value& a, const WittVector& w) {
  const Ring& A = *w.ring();
  std::vector<Value> xs;
  Value ap = a;  // a^{q^i}
  for (std::size_t i = 0; i <= w.n(); ++i) {
    if (i > 0) ap = A.pow(ap, w.context().q());
    xs.push_back(A.mul(ap, w.components()[i]));
  }
  return WittVector(w.context(), w.algebra(), std::move(xs));
}

WittVector verschiebung(const WittVector& w, std::size_t j) {
  std::vector<Value> xs(j, w.ring()->zero());
  xs.insert(xs.end(), w.components().begin(), w.components().end());
  return WittVector(w.context().with_length(w.n() + j), w.algebra(), std::move(xs));
}

WittVector truncate(const WittVector& w, std::size_t j) {
  if (j > w.n()) {
    fail(ErrorCode::IndexOutOfRange, "cannot truncate W_" + std::to_string(w.n()) + " to W_" + std::to_string(j));
  }
  std::vector<Value> xs(w.components().begin(), w.components().begin() + static_cast<std::ptrdiff_t>(j + 1));
  return WittVector(w.context().with_length(j), w.algebra(), std::move(xs));
}

Value ghost_component(const WittVector& w, std::size_t i, bool reduced) {
  const Ring& A = *w.ring();
  if (!reduced && i > w.n()) {
    fail(ErrorCode::IndexOutOfRange, "gh_" + std::to_string(i) + " on W_" + std::to_string(w.n()));
  }
  const Value pi = w.algebra()->map(w.context().pi());
  Value acc = A.zero();
  for (std::size_t k = 0; k <= std::min(i, w.n()); ++k) {
    Value term = A.mul(A.pow(pi, k), A.pow(w.components()[k], w.context().q_power(i - k)));
    acc = A.add(acc, term);
  }
  if (!reduced) return acc;
  return reduce_mod_power(acc, w.context().pi(), w.n() + 1, *w.algebra());
}

WittVector rebase_uniformizer(const WittVector& w, const Value& u) {
  const auto& r = rebase_polys(w.context(), u);
  if (w.algebra()->torsion_free(w.context().pi())) {
    auto g = ghost_entries(w.context(), *w.algebra(), w.components());
    return WittVector(r->target, w.algebra(), unghost_entries(r->target, *w.algebra(), g));
  }
  std::vector<Value> ys;
  for (const auto& p : r->polys) ys.push_back(evaluate(*r->ring, p, *w.algebra(), w.components()));
  return WittVector(r->target, w.algebra(), std::move(ys));
}

WittVector apply_structural(const StructuralPolynomialSet& s, const WittVector& a, const WittVector* b) {
  if (!(s.ctx == a.context())) fail(ErrorCode::ContextMismatch, "structural polynomials of another context");
  std::vector<Value> images = a.components();
  if (b) images.insert(images.end(), b->components().begin(), b->components().end());
  std::vector<Value> xs;
  for (const auto& p : s.polys) xs.push_back(evaluate(*s.ring, p, *a.algebra(), images));
  WittContext ctx = s.op == WittOp::Frobenius ? a.context().with_length(a.n() - 1) : a.context();
  return WittVector(ctx, a.algebra(), std::move(xs));
}

}  // namespace witt
