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

#ifndef WITT_MULTI_HPP
#define WITT_MULTI_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "witt/witt_ring.hpp"

namespace witt {

// Pairwise coprime prime elements of R0, kept in canonical ascending order
// (Z: by absolute value; F_p[t]: by degree, then coefficients).
class PrimeFamily {
 public:
  // NotPrimeElement for a non-prime entry; InvalidRing for repeats (up to units).
  static PrimeFamily make(RingPtr base, std::vector<Value> primes);

  const RingPtr& base() const { return base_; }
  std::size_t size() const { return primes_.size(); }
  const Value& prime(std::size_t a) const { return primes_.at(a); }
  std::uint64_t q(std::size_t a) const { return q_.at(a); }
  // Position of pi in the family; InvalidRing if absent.
  std::size_t index_of(const Value& pi) const;
  std::string to_string() const;

  bool operator==(const PrimeFamily& o) const { return base_->same_as(*o.base_) && primes_ == o.primes_; }

 private:
  RingPtr base_;
  std::vector<Value> primes_;
  std::vector<std::uint64_t> q_;
};

// n_alpha per family member, in family order.
using MultiIndex = std::vector<std::size_t>;

// All i <= n pointwise, lexicographic.
std::vector<MultiIndex> index_box(const MultiIndex& n);

// Element of W_{pi_r,n_r}(... W_{pi_1,n_1}(A) ...). `order` lists family
// positions from the innermost to the outermost nesting level; the canonical
// order is 0, 1, ..., r-1 (smallest prime innermost).
class MultiWittVector {
 public:
  struct Shape {
    PrimeFamily family;
    MultiIndex n;
    std::vector<std::size_t> order;
    AlgebraPtr alg;
    // levels[l] is the ring after l + 1 nestings; the last is the whole ring.
    std::vector<std::shared_ptr<const WittRing>> levels;

    const Ring& top() const;
    RingPtr top_ptr() const;
    // The R0-algebra at nesting depth l (0 is A itself).
    AlgebraPtr algebra_at(std::size_t l) const;
  };
  using ShapePtr = std::shared_ptr<const Shape>;

  static ShapePtr make_shape(const PrimeFamily& family, const MultiIndex& n, const AlgebraPtr& alg,
                             std::vector<std::size_t> order = {});

  MultiWittVector(ShapePtr shape, Value value) : shape_(std::move(shape)), value_(std::move(value)) {}
  // Components indexed by multi-index in family order; missing ones are zero.
  static MultiWittVector from_components(ShapePtr shape, const std::map<MultiIndex, Value>& comps);

  const ShapePtr& shape() const { return shape_; }
  const Value& value() const { return value_; }
  Value component(const MultiIndex& i) const;
  std::map<MultiIndex, Value> components() const;

  bool operator==(const MultiWittVector& o) const;
  std::string to_string() const;

 private:
  ShapePtr shape_;
  Value value_;
};

// Composite ghost component at every i in [0, n].
std::map<MultiIndex, Value> multi_ghost(const MultiWittVector& w);
// Inverse of multi_ghost for torsion-free A; CongruenceViolation off the image.
MultiWittVector multi_unghost(const MultiWittVector::ShapePtr& shape, const std::map<MultiIndex, Value>& g);

MultiWittVector multi_add(const MultiWittVector& a, const MultiWittVector& b);
MultiWittVector multi_mul(const MultiWittVector& a, const MultiWittVector& b);
MultiWittVector multi_neg(const MultiWittVector& a);
MultiWittVector multi_teichmuller(const Value& a, const MultiWittVector::ShapePtr& shape);
MultiWittVector multi_one(const MultiWittVector::ShapePtr& shape);

// Same element, nested in another order. Ghost transport when A is
// torsion-free, otherwise through A's torsion-free cover; TorsionNotSupported
// when neither applies.
MultiWittVector reorder(const MultiWittVector& w, const std::vector<std::size_t>& order);

// ---- big Witt vectors over Z ---------------------------------------------

struct TruncationSet {
  std::vector<std::uint64_t> elements;  // ascending
  std::uint64_t N;
  PrimeFamily family;
  MultiIndex n;

  MultiIndex index_of(std::uint64_t d) const;
  std::uint64_t divisor_of(const MultiIndex& i) const;
};

// T must be the divisor set of some N: NotDivisorClosed, NotRectangular.
TruncationSet truncation_set_context(const std::set<std::uint64_t>& T);

// w_m = sum_{d | m} d x_d^{m/d}, for m in T.
std::map<std::uint64_t, Value> classical_big_ghost(const Ring& A, const std::map<std::uint64_t, Value>& x,
                                                   const TruncationSet& T);

// Polynomial coordinate change between classical big-Witt coordinates x_d
// and nested components y_i, both over Z.
struct BigWittChange {
  std::shared_ptr<const MultiPolyRing> classical_ring;  // Z[x_d]
  std::shared_ptr<const MultiPolyRing> nested_ring;     // Z[y_i]
  std::map<MultiIndex, Value> nested_of_classical;
  std::map<std::uint64_t, Value> classical_of_nested;
};
std::shared_ptr<const BigWittChange> big_witt_change(const TruncationSet& T);

// Classical coordinates of a nested vector over a Z-algebra, and back.
std::map<std::uint64_t, Value> to_classical(const MultiWittVector& w, const TruncationSet& T);
MultiWittVector from_classical(const std::map<std::uint64_t, Value>& x, const TruncationSet& T, const AlgebraPtr& alg);

}  // namespace witt

#endif  // WITT_MULTI_HPP
