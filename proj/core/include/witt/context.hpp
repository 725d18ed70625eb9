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

#ifndef WITT_CONTEXT_HPP
#define WITT_CONTEXT_HPP

#include <cstdint>
#include <string>

#include "witt/algebra.hpp"

namespace witt {

// One principal single-prime Witt functor W_{R0,(pi),n}. Normalized
// indexing: W_n has n + 1 components.
class WittContext {
 public:
  // Throws NotPrimeElement unless pi is prime in r0 (Z or F_p[t]).
  static WittContext make(RingPtr r0, Value pi, std::size_t n);

  const RingPtr& base() const { return r0_; }
  const Value& pi() const { return pi_; }
  RingElement pi_element() const { return {r0_, pi_}; }
  std::uint64_t q() const { return q_; }
  std::size_t n() const { return n_; }
  // True when R0 = F_p[t].
  bool positive_characteristic() const { return r0_->kind() == RingKind::UnivariatePoly; }

  // q^k; ResourceLimit when it does not fit in 32 bits.
  std::uint64_t q_power(std::size_t k) const;

  WittContext with_length(std::size_t n) const;

  // Identifies (R0, pi) independently of n.
  std::string key() const;
  // Human-readable, with both the normalized and the traditional length.
  std::string describe() const;

  bool operator==(const WittContext& o) const {
    return n_ == o.n_ && pi_ == o.pi_ && r0_->same_as(*o.r0_);
  }

 private:
  WittContext(RingPtr r0, Value pi, std::uint64_t q, std::size_t n)
      : r0_(std::move(r0)), pi_(std::move(pi)), q_(q), n_(n) {}

  RingPtr r0_;
  Value pi_;
  std::uint64_t q_;
  std::size_t n_;
};

}  // namespace witt

#endif  // WITT_CONTEXT_HPP
