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

#ifndef WITT_RING_HPP
#define WITT_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "witt/coeff_domain.hpp"
#include "witt/error.hpp"
#include "witt/fp_poly.hpp"
#include "witt/sparse_poly.hpp"

namespace witt {

using ZPoly = SparsePoly<Integer>;
using FtPoly = SparsePoly<FpPoly>;

struct Value;
using ValueList = std::vector<Value>;

// Canonical representation of a ring element. Which alternative is used is
// fixed by the owning ring; equality of canonical values is element equality.
struct Value {
  std::variant<Integer, FpPoly, ZPoly, FtPoly, ValueList> rep;

  Value() : rep(Integer(0)) {}
  Value(Integer z) : rep(std::move(z)) {}  // NOLINT
  Value(FpPoly f) : rep(std::move(f)) {}   // NOLINT
  Value(ZPoly f) : rep(std::move(f)) {}    // NOLINT
  Value(FtPoly f) : rep(std::move(f)) {}   // NOLINT
  Value(ValueList v) : rep(std::move(v)) {}  // NOLINT

  bool operator==(const Value& o) const { return rep == o.rep; }

  const Integer& integer() const { return std::get<Integer>(rep); }
  const FpPoly& fp_poly() const { return std::get<FpPoly>(rep); }
  const ZPoly& z_poly() const { return std::get<ZPoly>(rep); }
  const FtPoly& ft_poly() const { return std::get<FtPoly>(rep); }
  const ValueList& list() const { return std::get<ValueList>(rep); }
};

enum class RingKind {
  Integers,
  IntegersMod,
  PrimeField,
  UnivariatePoly,
  QuotientPoly,
  MultiPoly,
  Witt,
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// A term of an element written as a polynomial in the ring's generators with
// integer coefficients (residues for finite coefficient rings).
struct IntegerTerm {
  std::vector<Exponent> exponents;
  Integer coeff;
};

// Immutable ring descriptor with the arithmetic of its elements.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  virtual ~Ring() = default;

  virtual RingKind kind() const = 0;
  // Canonical descriptor string; two rings are equal iff their names are.
  virtual std::string name() const = 0;

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value from_integer(const Integer& n) const = 0;

  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value sub(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  virtual Value pow(const Value& a, std::uint64_t e) const;

  virtual bool is_zero(const Value& a) const { return a == zero(); }
  virtual bool equal(const Value& a, const Value& b) const { return a == b; }

  // c with b*c == a, or nullopt. The answer is the canonical one when several exist.
  virtual std::optional<Value> exact_div(const Value& a, const Value& b) const = 0;

  // Canonical representative of a modulo the principal ideal (g).
  virtual Value reduce_mod(const Value& a, const Value& g) const;

  // 0 for characteristic zero.
  virtual Integer characteristic() const = 0;
  virtual bool is_domain() const = 0;
  // Multiplication by x is injective.
  virtual bool is_nonzerodivisor(const Value& x) const { return is_domain() && !is_zero(x); }

  // Named generators (polynomial variables, including those of a coefficient ring).
  virtual std::optional<Value> generator(const std::string& name) const;
  // Own polynomial variables, in order; empty for Z, Z/m, F_p.
  virtual std::vector<std::string> variables() const { return {}; }
  // Element as integer-coefficient polynomial in variables(); nullopt when the
  // ring is not of that shape.
  virtual std::optional<std::vector<IntegerTerm>> integer_terms(const Value& a) const;

  // Every element, for finite rings.
  virtual std::optional<std::vector<Value>> elements() const { return std::nullopt; }

  virtual std::string format(const Value& a) const = 0;

  RingPtr ptr() const { return shared_from_this(); }
  bool same_as(const Ring& o) const { return this == &o || name() == o.name(); }
};

// Ring element paired with its ring; arithmetic checks the rings agree.
class RingElement {
 public:
  RingElement() = default;
  RingElement(RingPtr ring, Value v) : ring_(std::move(ring)), v_(std::move(v)) {}

  const RingPtr& ring() const { return ring_; }
  const Value& value() const { return v_; }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const { return {ring_, ring_->neg(v_)}; }
  RingElement& operator+=(const RingElement& o) { return *this = *this + o; }
  RingElement& operator-=(const RingElement& o) { return *this = *this - o; }
  RingElement& operator*=(const RingElement& o) { return *this = *this * o; }
  RingElement pow(std::uint64_t e) const { return {ring_, ring_->pow(v_, e)}; }

  bool operator==(const RingElement& o) const;
  bool is_zero() const { return ring_->is_zero(v_); }

  std::string to_string() const { return ring_->format(v_); }

 private:
  void check_same(const RingElement& o) const;

  RingPtr ring_;
  Value v_;
};

// exact_div on elements; DivisionInexact when no quotient exists.
RingElement exact_div(const RingElement& a, const RingElement& b);

}  // namespace witt

#endif  // WITT_RING_HPP
