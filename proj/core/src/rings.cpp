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

#include "witt/rings.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "witt/parse.hpp"

namespace witt {

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Integer fdiv_r(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::uint32_t residue_u32(const Integer& n, std::uint32_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

class IntegerRing final : public Ring {
 public:
  RingKind kind() const override { return RingKind::Integers; }
  std::string name() const override { return "Z"; }
  Value zero() const override { return Integer(0); }
  Value one() const override { return Integer(1); }
  Value from_integer(const Integer& n) const override { return n; }
  Value add(const Value& a, const Value& b) const override { return Integer(a.integer() + b.integer()); }
  Value sub(const Value& a, const Value& b) const override { return Integer(a.integer() - b.integer()); }
  Value neg(const Value& a) const override { return Integer(-a.integer()); }
  Value mul(const Value& a, const Value& b) const override { return Integer(a.integer() * b.integer()); }
  Value pow(const Value& a, std::uint64_t e) const override {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.integer().get_mpz_t(), static_cast<unsigned long>(e));
    return r;
  }
  std::optional<Value> exact_div(const Value& a, const Value& b) const override {
    auto q = CoeffDomain<Integer>{}.exact_div(a.integer(), b.integer());
    if (!q) return std::nullopt;
    return Value(std::move(*q));
  }
  Value reduce_mod(const Value& a, const Value& g) const override {
    if (sgn(g.integer()) == 0) return a;
    Integer m = abs(g.integer());
    return fdiv_r(a.integer(), m);
  }
  Integer characteristic() const override { return 0; }
  bool is_domain() const override { return true; }
  std::optional<std::vector<IntegerTerm>> integer_terms(const Value& a) const override {
    if (sgn(a.integer()) == 0) return std::vector<IntegerTerm>{};
    return std::vector<IntegerTerm>{{{}, a.integer()}};
  }
  std::string format(const Value& a) const override { return to_string(a.integer()); }
};

// Z/m; also serves PrimeField when `field` is set.
class IntegerModRing final : public Ring {
 public:
  IntegerModRing(Integer m, bool field) : m_(std::move(m)), field_(field) {}

  RingKind kind() const override { return field_ ? RingKind::PrimeField : RingKind::IntegersMod; }
  std::string name() const override {
    return field_ ? "F" + to_string(m_) : "Z/" + to_string(m_);
  }
  Value zero() const override { return Integer(0); }
  Value one() const override { return Integer(1); }
  Value from_integer(const Integer& n) const override { return fdiv_r(n, m_); }
  Value add(const Value& a, const Value& b) const override {
    Integer r = a.integer() + b.integer();
    if (r >= m_) r -= m_;
    return r;
  }
  Value sub(const Value& a, const Value& b) const override {
    Integer r = a.integer() - b.integer();
    if (sgn(r) < 0) r += m_;
    return r;
  }
  Value neg(const Value& a) const override {
    if (sgn(a.integer()) == 0) return a;
    return Integer(m_ - a.integer());
  }
  Value mul(const Value& a, const Value& b) const override {
    return fdiv_r(a.integer() * b.integer(), m_);
  }
  Value pow(const Value& a, std::uint64_t e) const override {
    return CoeffDomain<Integer>{m_}.pow(a.integer(), e);
  }
  std::optional<Value> exact_div(const Value& a, const Value& b) const override {
    // Solve b*c = a mod m; smallest nonnegative solution.
    Integer g = gcd(b.integer(), m_);
    if (!mpz_divisible_p(a.integer().get_mpz_t(), g.get_mpz_t())) return std::nullopt;
    Integer mg = m_ / g;
    if (mg == 1) return Value(Integer(0));
    Integer inv;
    Integer bg = b.integer() / g;
    if (!mpz_invert(inv.get_mpz_t(), bg.get_mpz_t(), mg.get_mpz_t())) return std::nullopt;
    return Value(fdiv_r(Integer(a.integer() / g) * inv, mg));
  }
  Value reduce_mod(const Value& a, const Value& g) const override {
    Integer d = gcd(g.integer(), m_);
    return fdiv_r(a.integer(), d);
  }
  Integer characteristic() const override { return m_; }
  bool is_domain() const override { return field_ || is_prime(m_); }
  bool is_nonzerodivisor(const Value& x) const override { return gcd(x.integer(), m_) == 1; }
  std::optional<std::vector<IntegerTerm>> integer_terms(const Value& a) const override {
    if (sgn(a.integer()) == 0) return std::vector<IntegerTerm>{};
    return std::vector<IntegerTerm>{{{}, a.integer()}};
  }
  std::optional<std::vector<Value>> elements() const override {
    std::vector<Value> out;
    for (Integer i = 0; i < m_; ++i) out.emplace_back(i);
    return out;
  }
  std::string format(const Value& a) const override { return to_string(a.integer()); }

 private:
  Integer m_;
  bool field_;
};

std::vector<IntegerTerm> fp_poly_terms(const FpPoly& f) {
  std::vector<IntegerTerm> out;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    if (f.coeff(i) == 0) continue;
    out.push_back({{static_cast<Exponent>(i)}, Integer(static_cast<unsigned long>(f.coeff(i)))});
  }
  return out;
}

template <class C>
class MultiPolyRingImpl final : public MultiPolyRing {
 public:
  MultiPolyRingImpl(RingPtr base, std::vector<std::string> vars, CoeffDomain<C> dom)
      : MultiPolyRing(std::move(base), std::move(vars)), dom_(std::move(dom)) {}

  using P = SparsePoly<C>;

  std::string name() const override {
    std::string s = base_->name() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) s += (i ? "," : "") + vars_[i];
    return s + "]";
  }
  Value zero() const override { return P(nvars()); }
  Value one() const override { return P::constant(nvars(), dom_.one(), dom_); }
  Value from_integer(const Integer& n) const override {
    return P::constant(nvars(), dom_.from_int(n), dom_);
  }
  Value add(const Value& a, const Value& b) const override { return poly::add(get(a), get(b), dom_); }
  Value sub(const Value& a, const Value& b) const override { return poly::sub(get(a), get(b), dom_); }
  Value neg(const Value& a) const override { return poly::neg(get(a), dom_); }
  Value mul(const Value& a, const Value& b) const override { return poly::mul(get(a), get(b), dom_); }
  Value pow(const Value& a, std::uint64_t e) const override { return poly::pow(get(a), e, dom_); }
  bool is_zero(const Value& a) const override { return get(a).is_zero(); }
  std::optional<Value> exact_div(const Value& a, const Value& b) const override {
    auto q = poly::exact_div(get(a), get(b), dom_);
    if (!q) return std::nullopt;
    return Value(std::move(*q));
  }
  Value reduce_mod(const Value& a, const Value& g) const override {
    const P& f = get(a);
    const P& m = get(g);
    if (m.is_zero()) return a;
    if (m.is_constant()) return reduce_by_constant(f, m.coeff(0));
    if (m.size() == 1 && dom_.exact_div(dom_.one(), m.coeff(0))) {
      // Unit multiple of a monomial: drop every divisible term.
      P out(nvars());
      auto me = m.exps(0);
      for (std::size_t i = 0; i < f.size(); ++i) {
        bool divisible = true;
        for (std::size_t v = 0; v < nvars(); ++v) divisible &= f.exps(i)[v] >= me[v];
        if (!divisible) out.push_back_term(f.exps(i), f.coeff(i));
      }
      return out;
    }
    fail(ErrorCode::Unsupported, "reduction modulo a non-monomial ideal in " + name());
  }
  Integer characteristic() const override { return base_->characteristic(); }
  bool is_domain() const override { return true; }
  std::optional<Value> generator(const std::string& n) const override {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == n) return variable(i);
    }
    if (auto g = base_->generator(n)) return embed(*g);
    return std::nullopt;
  }
  std::optional<std::vector<IntegerTerm>> integer_terms(const Value& a) const override;
  Value embed(const Value& base_value) const override;
  Value variable(std::size_t index) const override { return P::variable(nvars(), index, dom_); }
  std::size_t term_count(const Value& a) const override { return get(a).size(); }
  std::string format(const Value& a) const override;

 private:
  const P& get(const Value& v) const { return std::get<P>(v.rep); }
  Value reduce_by_constant(const P& f, const C& c) const;

  CoeffDomain<C> dom_;
};

template <>
Value MultiPolyRingImpl<Integer>::embed(const Value& b) const {
  return P::constant(nvars(), b.integer(), dom_);
}

template <>
Value MultiPolyRingImpl<FpPoly>::embed(const Value& b) const {
  return P::constant(nvars(), b.fp_poly(), dom_);
}

template <>
Value MultiPolyRingImpl<Integer>::reduce_by_constant(const P& f, const Integer& c) const {
  P out = f;
  if (dom_.modulus != 0) return sgn(c) == 0 ? Value(out) : Value(P(nvars()));
  Integer m = abs(c);
  for (auto& x : out.mutable_coeffs()) x = fdiv_r(x, m);
  out.prune(dom_);
  return out;
}

template <>
Value MultiPolyRingImpl<FpPoly>::reduce_by_constant(const P& f, const FpPoly& c) const {
  P out = f;
  for (auto& x : out.mutable_coeffs()) x = x % c;
  out.prune(dom_);
  return out;
}

template <>
std::optional<std::vector<IntegerTerm>> MultiPolyRingImpl<Integer>::integer_terms(const Value& a) const {
  const P& f = get(a);
  std::vector<IntegerTerm> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out.push_back({std::vector<Exponent>(f.exps(i).begin(), f.exps(i).end()), f.coeff(i)});
  }
  return out;
}

template <>
std::optional<std::vector<IntegerTerm>> MultiPolyRingImpl<FpPoly>::integer_terms(const Value&) const {
  return std::nullopt;
}

template <class C>
std::string MultiPolyRingImpl<C>::format(const Value& a) const {
  const P& f = get(a);
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::string coeff;
    bool negative = false;
    if constexpr (std::is_same_v<C, Integer>) {
      Integer c = f.coeff(i);
      if (sgn(c) < 0) {
        negative = true;
        c = -c;
      }
      coeff = to_string(c);
    } else {
      coeff = dom_.format(f.coeff(i));
      if (!f.coeff(i).is_constant()) coeff = "(" + coeff + ")";
    }
    std::string mono;
    auto e = f.exps(i);
    for (std::size_t v = 0; v < nvars(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (i == 0) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    if (mono.empty()) {
      os << coeff;
    } else if (coeff == "1") {
      os << mono;
    } else {
      os << coeff << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace

// ---- UnivariatePolyRing ----------------------------------------------------

std::string UnivariatePolyRing::name() const {
  return "F" + std::to_string(p_) + "[" + var_ + "]";
}

Value UnivariatePolyRing::from_integer(const Integer& n) const {
  return FpPoly::constant(p_, residue_u32(n, p_));
}

std::optional<Value> UnivariatePolyRing::exact_div(const Value& a, const Value& b) const {
  if (b.fp_poly().is_zero()) return std::nullopt;
  auto q = a.fp_poly().exact_div(b.fp_poly());
  if (!q) return std::nullopt;
  return Value(std::move(*q));
}

Value UnivariatePolyRing::reduce_mod(const Value& a, const Value& g) const {
  if (g.fp_poly().is_zero()) return a;
  return a.fp_poly() % g.fp_poly();
}

std::optional<Value> UnivariatePolyRing::generator(const std::string& name) const {
  if (name != var_) return std::nullopt;
  return FpPoly::monomial(p_, 1, 1);
}

std::optional<std::vector<IntegerTerm>> UnivariatePolyRing::integer_terms(const Value& a) const {
  return fp_poly_terms(a.fp_poly());
}

// ---- QuotientPolyRing ------------------------------------------------------

std::string QuotientPolyRing::name() const {
  return "F" + std::to_string(p_) + "[" + var_ + "]/(" + modulus_.to_string(var_) + ")";
}

Value QuotientPolyRing::from_integer(const Integer& n) const {
  return FpPoly::constant(p_, residue_u32(n, p_)) % modulus_;
}

std::optional<Value> QuotientPolyRing::exact_div(const Value& a, const Value& b) const {
  // Solve b*c = a mod f: with g = gcd(b, f), need g | a.
  const FpPoly& bv = b.fp_poly();
  FpPoly g = FpPoly::gcd(bv, modulus_);
  auto ag = a.fp_poly().exact_div(g);
  if (!ag) return std::nullopt;
  FpPoly fg = *modulus_.exact_div(g);
  if (fg.degree() == 0) return Value(FpPoly(p_));
  FpPoly bg = *bv.exact_div(g);
  auto [d, s, t] = FpPoly::xgcd(bg % fg, fg);
  (void)t;
  if (d.degree() != 0) return std::nullopt;
  return Value((*ag * s) % fg);
}

Value QuotientPolyRing::reduce_mod(const Value& a, const Value& g) const {
  FpPoly h = g.fp_poly().is_zero() ? modulus_ : FpPoly::gcd(g.fp_poly(), modulus_);
  return a.fp_poly() % h;
}

bool QuotientPolyRing::is_nonzerodivisor(const Value& x) const {
  return FpPoly::gcd(x.fp_poly(), modulus_).degree() == 0;
}

std::optional<Value> QuotientPolyRing::generator(const std::string& name) const {
  if (name != var_) return std::nullopt;
  return FpPoly::monomial(p_, 1, 1) % modulus_;
}

std::optional<std::vector<IntegerTerm>> QuotientPolyRing::integer_terms(const Value& a) const {
  return fp_poly_terms(a.fp_poly());
}

std::optional<std::vector<Value>> QuotientPolyRing::elements() const {
  const std::size_t d = static_cast<std::size_t>(modulus_.degree());
  std::vector<Value> out;
  std::vector<std::uint32_t> digits(d, 0);
  while (true) {
    out.emplace_back(FpPoly(p_, digits));
    std::size_t i = 0;
    while (i < d && ++digits[i] == p_) digits[i++] = 0;
    if (i == d) break;
  }
  return out;
}

// ---- factories -------------------------------------------------------------

RingPtr integers() {
  static const RingPtr z = std::make_shared<IntegerRing>();
  return z;
}

RingPtr integers_mod(const Integer& m) {
  if (m < 2) fail(ErrorCode::InvalidRing, "modulus must be at least 2");
  return std::make_shared<IntegerModRing>(m, false);
}

RingPtr prime_field(const Integer& p) {
  if (!is_prime(p)) fail(ErrorCode::InvalidRing, to_string(p) + " is not prime");
  return std::make_shared<IntegerModRing>(p, true);
}

RingPtr univariate(std::uint32_t p, std::string var) {
  if (!is_prime(Integer(static_cast<unsigned long>(p))) || p >= (1u << 31)) {
    fail(ErrorCode::InvalidRing, "F_p[t] needs a prime p < 2^31");
  }
  return std::make_shared<UnivariatePolyRing>(p, std::move(var));
}

RingPtr quotient(const RingPtr& base, const FpPoly& modulus) {
  auto* u = dynamic_cast<const UnivariatePolyRing*>(base.get());
  if (!u) fail(ErrorCode::InvalidRing, "quotient base must be F_p[t]");
  if (modulus.degree() < 1) fail(ErrorCode::InvalidRing, "quotient modulus must be nonconstant");
  return std::make_shared<QuotientPolyRing>(u->prime(), u->var(), modulus.monic());
}

RingPtr multi(const RingPtr& base, std::vector<std::string> vars) {
  std::set<std::string> seen(vars.begin(), vars.end());
  if (seen.size() != vars.size()) fail(ErrorCode::InvalidRing, "variable names must be distinct");
  switch (base->kind()) {
    case RingKind::Integers:
      return std::make_shared<MultiPolyRingImpl<Integer>>(base, std::move(vars), CoeffDomain<Integer>{0});
    case RingKind::PrimeField:
      return std::make_shared<MultiPolyRingImpl<Integer>>(base, std::move(vars),
                                                          CoeffDomain<Integer>{base->characteristic()});
    case RingKind::UnivariatePoly: {
      auto* u = static_cast<const UnivariatePolyRing*>(base.get());
      if (seen.count(u->var())) fail(ErrorCode::InvalidRing, "variable clashes with base variable");
      return std::make_shared<MultiPolyRingImpl<FpPoly>>(base, std::move(vars),
                                                         CoeffDomain<FpPoly>{u->prime(), u->var()});
    }
    default:
      fail(ErrorCode::InvalidRing, "polynomial rings are built over Z, F_p or F_p[t]");
  }
}

// ---- descriptor parsing ----------------------------------------------------

namespace {

class RingParser {
 public:
  explicit RingParser(std::string_view s) : s_(s) {}

  RingPtr parse() {
    RingPtr r = atom();
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c == '[') {
        ++pos_;
        std::vector<std::string> vars = var_list();
        if (r->kind() == RingKind::PrimeField && vars.size() == 1) {
          r = univariate(static_cast<std::uint32_t>(r->characteristic().get_ui()), vars[0]);
        } else {
          r = multi(r, std::move(vars));
        }
      } else if (c == '/' && r->kind() == RingKind::UnivariatePoly) {
        ++pos_;
        expect('(');
        std::size_t depth = 1, start = pos_;
        while (pos_ < s_.size() && depth > 0) {
          if (s_[pos_] == '(') ++depth;
          if (s_[pos_] == ')') --depth;
          ++pos_;
        }
        if (depth != 0) error("unbalanced parentheses");
        RingElement m = parse_element(r, s_.substr(start, pos_ - start - 1));
        r = quotient(r, m.value().fp_poly());
      } else {
        error("unexpected '" + std::string(1, c) + "'");
      }
    }
    return r;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError, msg + " at column " + std::to_string(pos_ + 1) +
                                    " in ring \"" + std::string(s_) + "\"");
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  Integer number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::vector<std::string> var_list() {
    std::vector<std::string> vars;
    while (true) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      if (start == pos_) error("expected a variable name");
      vars.emplace_back(s_.substr(start, pos_ - start));
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      return vars;
    }
  }

  RingPtr atom() {
    if (s_.substr(pos_, 6) == "Fp[t]:") {
      pos_ += 6;
      Integer p = number();
      return univariate(static_cast<std::uint32_t>(p.get_ui()), "t");
    }
    if (s_.substr(pos_, 3) == "GF(") {
      pos_ += 3;
      Integer p = number();
      expect(')');
      return prime_field(p);
    }
    if (pos_ < s_.size() && s_[pos_] == 'Z') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        return integers_mod(number());
      }
      return integers();
    }
    if (pos_ < s_.size() && s_[pos_] == 'F') {
      ++pos_;
      return prime_field(number());
    }
    error("expected Z, Z/m, F<p> or Fp[t]:<p>");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RingPtr parse_ring(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  }
  return RingParser(compact).parse();
}

std::vector<PolyTerm> poly_terms(const Value& v) {
  std::vector<PolyTerm> out;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ZPoly> || std::is_same_v<T, FtPoly>) {
          for (std::size_t i = 0; i < p.size(); ++i) {
            auto e = p.exps(i);
            out.push_back({Value(p.coeff(i)), {e.begin(), e.end()}});
          }
        } else {
          fail(ErrorCode::InvalidRing, "not a polynomial value");
        }
      },
      v.rep);
  return out;
}

}  // namespace witt
