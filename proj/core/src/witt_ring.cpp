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

#include "witt/witt_ring.hpp"

#include <algorithm>

namespace witt {

std::shared_ptr<const WittRing> WittRing::make(WittContext ctx, AlgebraPtr alg) {
  return std::shared_ptr<const WittRing>(new WittRing(std::move(ctx), std::move(alg)));
}

AlgebraPtr WittRing::as_algebra() const {
  std::call_once(alg_once_, [this] { as_alg_ = AlgebraStructure::make(ctx_.base(), ptr()); });
  return as_alg_;
}

std::string WittRing::name() const {
  return "W" + std::to_string(ctx_.n()) + "[" + ctx_.base()->format(ctx_.pi()) + "](" + alg_->name() + ")";
}

Value WittRing::from_integer(const Integer& n) const {
  return unwrap(scalar(ctx_.base()->from_integer(n), ctx_, alg_));
}

std::optional<Value> WittRing::exact_div(const Value& a, const Value& b) const {
  if (!alg_->torsion_free(ctx_.pi())) {
    fail(ErrorCode::Unsupported, "division in " + name() + " needs a torsion-free coefficient ring");
  }
  const Ring& A = *alg_->target();
  auto ga = ghost(wrap(a)).entries();
  auto gb = ghost(wrap(b)).entries();
  for (std::size_t k = 0; k < ga.size(); ++k) {
    auto c = A.exact_div(ga[k], gb[k]);
    if (!c) return std::nullopt;
    ga[k] = std::move(*c);
  }
  try {
    return unwrap(unghost(GhostVector(ctx_, alg_, std::move(ga))));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CongruenceViolation) return std::nullopt;
    throw;
  }
}

Integer WittRing::characteristic() const {
  if (ctx_.positive_characteristic()) return ctx_.base()->characteristic();
  const Integer c = alg_->target()->characteristic();
  if (c == 0) return 0;
  // The characteristic divides c^{n+1}; test its divisors in increasing order.
  std::vector<std::pair<Integer, unsigned>> factors;
  Integer rest = c;
  for (Integer d = 2; d * d <= rest; ++d) {
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e) factors.emplace_back(d, e * static_cast<unsigned>(ctx_.n() + 1));
  }
  if (rest > 1) factors.emplace_back(rest, static_cast<unsigned>(ctx_.n() + 1));
  std::vector<Integer> divisors{1};
  for (const auto& [prime, e] : factors) {
    std::vector<Integer> next;
    for (const auto& d : divisors) {
      Integer x = d;
      for (unsigned i = 0; i <= e; ++i, x *= prime) next.push_back(x);
    }
    divisors = std::move(next);
  }
  std::sort(divisors.begin(), divisors.end());
  for (const auto& d : divisors) {
    if (d > 1 && is_zero(from_integer(d))) return d;
  }
  fail(ErrorCode::InternalIntegrityError, "characteristic of " + name() + " not found");
}

bool WittRing::is_nonzerodivisor(const Value& x) const {
  if (!alg_->torsion_free(ctx_.pi())) return false;
  const auto gh = ghost(wrap(x));
  for (const auto& g : gh.entries()) {
    if (!alg_->target()->is_nonzerodivisor(g)) return false;
  }
  return true;
}

std::optional<Value> WittRing::generator(const std::string& name) const {
  if (!ctx_.positive_characteristic()) return std::nullopt;
  const auto& r0 = static_cast<const UnivariatePolyRing&>(*ctx_.base());
  if (name != r0.var()) return std::nullopt;
  return unwrap(scalar(*r0.generator(name), ctx_, alg_));
}

std::optional<std::vector<Value>> WittRing::elements() const {
  auto base = alg_->target()->elements();
  if (!base) return std::nullopt;
  std::vector<Value> out;
  std::vector<std::size_t> idx(ctx_.n() + 1, 0);
  while (true) {
    ValueList xs;
    for (std::size_t i : idx) xs.push_back((*base)[i]);
    out.emplace_back(std::move(xs));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == base->size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

}  // namespace witt
