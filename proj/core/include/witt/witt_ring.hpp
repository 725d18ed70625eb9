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

#ifndef WITT_WITT_RING_HPP
#define WITT_WITT_RING_HPP

#include <memory>

#include "witt/witt_vector.hpp"

namespace witt {

// W_n(A) as a ring in its own right; elements are component lists. Used to
// nest single-prime functors and wherever a generic Ring is expected.
class WittRing final : public Ring {
 public:
  static std::shared_ptr<const WittRing> make(WittContext ctx, AlgebraPtr alg);

  const WittContext& context() const { return ctx_; }
  const AlgebraPtr& algebra() const { return alg_; }
  // W_n(A) as an algebra over R0.
  AlgebraPtr as_algebra() const;

  WittVector wrap(const Value& v) const { return WittVector(ctx_, alg_, v.list()); }
  static Value unwrap(const WittVector& w) { return Value(ValueList(w.components())); }

  RingKind kind() const override { return RingKind::Witt; }
  std::string name() const override;
  Value zero() const override { return unwrap(zero_vector(ctx_, alg_)); }
  Value one() const override { return unwrap(one_vector(ctx_, alg_)); }
  Value from_integer(const Integer& n) const override;
  Value add(const Value& a, const Value& b) const override { return unwrap(witt::add(wrap(a), wrap(b))); }
  Value sub(const Value& a, const Value& b) const override { return unwrap(witt::sub(wrap(a), wrap(b))); }
  Value neg(const Value& a) const override { return unwrap(witt::negate(wrap(a))); }
  Value mul(const Value& a, const Value& b) const override { return unwrap(witt::mul(wrap(a), wrap(b))); }
  bool is_zero(const Value& a) const override { return wrap(a).is_zero(); }
  bool equal(const Value& a, const Value& b) const override { return wrap(a) == wrap(b); }
  // Through ghost coordinates; Unsupported unless A is torsion-free.
  std::optional<Value> exact_div(const Value& a, const Value& b) const override;
  Integer characteristic() const override;
  bool is_domain() const override { return ctx_.n() == 0 && alg_->target()->is_domain(); }
  bool is_nonzerodivisor(const Value& x) const override;
  std::optional<Value> generator(const std::string& name) const override;
  std::optional<std::vector<Value>> elements() const override;
  std::string format(const Value& a) const override { return wrap(a).to_string(); }

 private:
  WittRing(WittContext ctx, AlgebraPtr alg) : ctx_(std::move(ctx)), alg_(std::move(alg)) {}

  WittContext ctx_;
  AlgebraPtr alg_;
  mutable std::once_flag alg_once_;
  mutable AlgebraPtr as_alg_;
};

}  // namespace witt

#endif  // WITT_WITT_RING_HPP
