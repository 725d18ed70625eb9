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

#include "witt/context.hpp"

namespace witt {

WittContext WittContext::make(RingPtr r0, Value pi, std::size_t n) {
  Integer q = residue_cardinality(r0, pi);
  if (!q.fits_ulong_p() || q > UINT32_MAX) {
    fail(ErrorCode::ResourceLimit, "residue field of size " + to_string(q) + " is too large");
  }
  return WittContext(std::move(r0), std::move(pi), q.get_ui(), n);
}

std::uint64_t WittContext::q_power(std::size_t k) const {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= q_;
    if (r > UINT32_MAX) fail(ErrorCode::ResourceLimit, "q^" + std::to_string(k) + " exceeds 32 bits");
  }
  return r;
}

WittContext WittContext::with_length(std::size_t n) const { return WittContext(r0_, pi_, q_, n); }

std::string WittContext::key() const { return r0_->name() + "|" + r0_->format(pi_); }

std::string WittContext::describe() const {
  return "W_" + std::to_string(n_) + " over " + r0_->name() + ", pi = " + r0_->format(pi_) +
         ", q = " + std::to_string(q_) + " (" + std::to_string(n_ + 1) +
         " components; traditionally W_" + std::to_string(n_ + 1) + ")";
}

}  // namespace witt
