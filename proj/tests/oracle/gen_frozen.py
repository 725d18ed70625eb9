# Copyright 2026 The Witt Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Independent sympy computations of Witt-vector polynomials and values.

Writes frozen_values.hpp, which the C++ tests include. Everything here is
derived directly from ghost components; nothing calls the C++ library.

    python3 gen_frozen.py > frozen_values.hpp
"""

import itertools
import sys

import sympy as sp
from sympy import Poly, GF, ZZ, symbols, expand, div


def cstr(s):
  return '"' + str(s).replace("**", "^").replace(" ", "") + '"'


HEADER = """/* Copyright 2026 The Witt Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/"""


# ---- p-typical over Z ------------------------------------------------------


def ghost(xs, p, k):
  return sum(p**i * xs[i] ** (p ** (k - i)) for i in range(k + 1))


def unghost_z(ws, p, n):
  xs = []
  for k in range(n + 1):
    rest = sum(p**i * xs[i] ** (p ** (k - i)) for i in range(k))
    q, r = sp.div(Poly(ws[k] - rest, *ALLVARS, domain=ZZ), Poly(p**k, *ALLVARS, domain=ZZ))
    assert r.is_zero, "inexact"
    xs.append(expand(q.as_expr()))
  return xs


def structural_z(p, n, op):
  global ALLVARS
  a = symbols(f"a0:{n + 1}")
  b = symbols(f"b0:{n + 1}")
  ALLVARS = a + b
  if op == "sum":
    ws = [ghost(a, p, k) + ghost(b, p, k) for k in range(n + 1)]
  elif op == "product":
    ws = [ghost(a, p, k) * ghost(b, p, k) for k in range(n + 1)]
  elif op == "negation":
    ws = [-ghost(a, p, k) for k in range(n + 1)]
  else:
    ws = [ghost(a, p, k + 1) for k in range(n)]
    return unghost_z(ws, p, n - 1)
  return unghost_z(ws, p, n)


# ---- F_p[t]-typical ----------------------------------------------------------

t = symbols("t")


def structural_ft(p, pi, q, n, op):
  a = symbols(f"a0:{n + 1}")
  b = symbols(f"b0:{n + 1}")
  gens = (t,) + a + b

  def P(e):
    return Poly(e, *gens, modulus=p)

  def gh(xs, k):
    return sum(P(pi) ** i * P(xs[i]) ** (q ** (k - i)) for i in range(k + 1))

  if op == "sum":
    ws = [gh(a, k) + gh(b, k) for k in range(n + 1)]
  elif op == "product":
    ws = [gh(a, k) * gh(b, k) for k in range(n + 1)]
  elif op == "negation":
    ws = [-gh(a, k) for k in range(n + 1)]
  else:
    ws = [gh(a, k + 1) for k in range(n)]
    n -= 1
  xs = []
  for k in range(n + 1):
    rest = P(0)
    for i in range(k):
      rest += P(pi) ** i * xs[i] ** (q ** (k - i))
    qt, r = div(ws[k] - rest, P(pi) ** k)
    assert r.is_zero, "inexact"
    xs.append(qt)
  return [x.as_expr() for x in xs]


def ft_str(e, p):
  # Symmetric residues from sympy; print coefficients in [0, p).
  poly = Poly(e, *sorted(e.free_symbols, key=str), modulus=p) if e.free_symbols else None
  if poly is None:
    return cstr(int(e) % p)
  terms = []
  for mon, c in poly.terms():
    c = int(c) % p
    if c == 0:
      continue
    factors = [str(c)] if c != 1 else []
    for g, k in zip(poly.gens, mon):
      if k:
        factors.append(str(g) if k == 1 else f"{g}^{k}")
    terms.append("*".join(factors) if factors else "1")
  return cstr(" + ".join(terms) if terms else "0")


# ---- big Witt over Z ---------------------------------------------------------


def divisors(N):
  return [d for d in range(1, N + 1) if N % d == 0]


def ord_p(m, p):
  k = 0
  while m % p == 0:
    m //= p
    k += 1
  return k


def big_witt(N, primes):
  T = divisors(N)
  idx = {d: tuple(ord_p(d, p) for p in primes) for d in T}
  xs = {d: symbols(f"x{d}") for d in T}
  ys = {d: symbols("y" + "".join(str(i) for i in idx[d])) for d in T}

  def classical_ghost(m, vals):
    return sum(d * vals[d] ** (m // d) for d in T if m % d == 0)

  def nested_ghost(m, vals):
    # Composite ghost: iterate the single-prime ghost map one prime at a time.
    i = idx[m]

    def full(level, fixed):
      if level < 0:
        d = 1
        for p, e in zip(primes, fixed):
          d *= p**e
        return vals[d]
      p = primes[level]
      return sum(p**k * full(level - 1, fixed[:level] + (k,) + fixed[level + 1:]) ** (p ** (i[level] - k))
                 for k in range(i[level] + 1))

    return full(len(primes) - 1, tuple(0 for _ in primes))

  # x in terms of y: equate ghosts and solve for x_m in increasing m.
  x_of_y = {}
  for m in T:
    known = {d: x_of_y[d] for d in T if d < m and m % d == 0}
    rest = sum(d * known[d] ** (m // d) for d in known)
    x_of_y[m] = expand((nested_ghost(m, ys) - rest) / m)
  y_of_x = {}
  for m in T:
    # nested_ghost(m, y) is linear in y_m with coefficient m.
    partial = {d: (y_of_x[d] if d in y_of_x else 0) for d in T}
    partial[m] = 0
    rest = nested_ghost(m, partial)
    y_of_x[m] = expand((classical_ghost(m, xs) - rest) / m)
  return T, idx, xs, ys, x_of_y, y_of_x


# ---- delta polynomials -----------------------------------------------------


def c_poly(q, pi):
  x, y = symbols("x y")
  return expand((x**q + y**q - (x + y) ** q) / pi)


def c_pair(qa, pa, qb, pb):
  x, y, z = symbols("x y z")
  X, Y = symbols("X Y")

  def C(q, pi, u, v):
    return c_poly(q, pi).subs({symbols("x"): X, symbols("y"): Y}).subs({X: u, Y: v})

  d_a_pb = sp.Rational(pb - pb**qa, pa)
  d_b_pa = sp.Rational(pa - pa**qb, pb)
  e = (C(qb, pb, x**qa, pa * y) / pa - C(qa, pa, x**qb, pb * z) / pb - d_a_pb / pb * z**qa + d_b_pa / pa * y**qb)
  return expand(e)


def direct_commutator(a, pa, qa, pb, qb):
  # delta_a(delta_b(r)) - delta_b(delta_a(r)) for r in Z with psi = id.
  da = lambda r: (r - r**qa) // pa
  db = lambda r: (r - r**qb) // pb
  return da(db(a)) - db(da(a)), da(a), db(a)


# ---- coordinate change ---------------------------------------------------------


def coord_change(p, n):
  th = symbols(f"theta0:{n + 1}")
  ws = [ghost(th, p, k) for k in range(n + 1)]
  out = []
  cur = ws
  for j in range(n + 1):
    out.append(expand(cur[0]))
    cur = [expand((cur[k + 1] - cur[k] ** p) / p) for k in range(len(cur) - 1)]
  return out


def rebase_ft(p, pi, u, n):
  y = symbols(f"y0:{n + 1}")
  gens = (t,) + y

  def P(e):
    return Poly(e, *gens, modulus=p)

  xs = []
  for k in range(n + 1):
    target = sum(P(u * pi) ** i * P(y[i]) ** (p ** (k - i)) for i in range(k + 1))
    rest = P(0)
    for i in range(k):
      rest += P(pi) ** i * xs[i] ** (p ** (k - i))
    qt, r = div(target - rest, P(pi) ** k)
    assert r.is_zero
    xs.append(qt)
  return [x.as_expr() for x in xs]


# ---- numeric values -----------------------------------------------------------


def witt_z_numeric(p, op, xa, xb):
  n = len(xa) - 1
  polys = structural_z(p, n, op)
  a = symbols(f"a0:{n + 1}")
  b = symbols(f"b0:{n + 1}")
  sub = dict(zip(a, xa))
  sub.update(zip(b, xb))
  return [int(e.subs(sub)) for e in polys]


def main():
  out = [HEADER, ""]
  w = out.append
  w("// Generated by tests/oracle/gen_frozen.py; do not edit.")
  w("#ifndef WITT_TESTS_FROZEN_VALUES_HPP")
  w("#define WITT_TESTS_FROZEN_VALUES_HPP")
  w("")
  w("#include <cstdint>")
  w("#include <utility>")
  w("#include <vector>")
  w("")
  w("namespace frozen {")
  w("")
  w("struct StructCase {")
  w("  const char* base;")
  w("  const char* pi;")
  w("  unsigned n;")
  w("  const char* op;")
  w("  std::vector<const char*> polys;")
  w("};")
  w("")
  w("inline const std::vector<StructCase>& structural() {")
  w("  static const std::vector<StructCase> v{")
  for p, n, ops in [(2, 2, ["sum", "product", "negation", "frobenius"]), (3, 1, ["sum", "product", "negation"]),
                    (3, 2, ["sum", "frobenius"]), (5, 1, ["sum", "product"])]:
    for op in ops:
      polys = structural_z(p, n, op)
      w(f'      {{"Z", "{p}", {n}, "{op}", {{' + ", ".join(cstr(e) for e in polys) + "}},")
  for p, pi, q, n, ops in [(2, t, 2, 2, ["sum", "product", "frobenius"]), (3, t, 3, 1, ["product", "negation"]),
                           (2, t**2 + t + 1, 4, 1, ["product", "frobenius"])]:
    for op in ops:
      polys = structural_ft(p, pi, q, n, op)
      w(f'      {{"Fp[t]:{p}", "{str(pi).replace("**", "^")}", {n}, "{op}", {{' +
        ", ".join(ft_str(e, p) for e in polys) + "}},")
  w("  };")
  w("  return v;")
  w("}")
  w("")

  w("struct BigWittCase {")
  w("  std::uint64_t N;")
  w("  std::vector<std::uint64_t> set;")
  w("  std::vector<const char*> classical_of_nested;  // x_d, d in set order")
  w("  std::vector<const char*> nested_of_classical;  // y_d")
  w("};")
  w("")
  w("inline const std::vector<BigWittCase>& big_witt() {")
  w("  static const std::vector<BigWittCase> v{")
  for N in [6, 12, 18]:
    primes = [p for p in [2, 3] if N % p == 0]
    T, idx, xs, ys, x_of_y, y_of_x = big_witt(N, primes)
    w(f"      {{{N}, {{{', '.join(map(str, T))}}}, {{" + ", ".join(cstr(x_of_y[d]) for d in T) + "}, {" +
      ", ".join(cstr(y_of_x[d]) for d in T) + "}},")
  w("  };")
  w("  return v;")
  w("}")
  w("")

  w("// C_q(x, y) over Z for pi = q.")
  w("inline const std::vector<std::pair<int, const char*>>& c_polys() {")
  w("  static const std::vector<std::pair<int, const char*>> v{")
  for q in [2, 3, 5, 7]:
    w(f"      {{{q}, {cstr(c_poly(q, q))}}},")
  w("  };")
  w("  return v;")
  w("}")
  w("")
  e = c_pair(2, 2, 3, 3)
  assert all(c.is_integer for c in Poly(e).coeffs())
  w(f"inline const char* c_pair_2_3() {{ return {cstr(e)}; }}")
  e35 = c_pair(3, 3, 5, 5)
  assert all(c.is_integer for c in Poly(e35).coeffs())
  w(f"inline const char* c_pair_3_5() {{ return {cstr(e35)}; }}")
  w("")
  w("struct CommutatorSample {")
  w("  long a, delta2, delta3, commutator;")
  w("};")
  w("inline const std::vector<CommutatorSample>& commutators() {")
  w("  static const std::vector<CommutatorSample> v{")
  x, y, z = symbols("x y z")
  for a in [-3, -1, 0, 1, 2, 5, 7]:
    c, d2, d3 = direct_commutator(a, 2, 2, 3, 3)
    assert e.subs({x: a, y: d2, z: d3}) == c
    w(f"      {{{a}, {d2}, {d3}, {c}}},")
  w("  };")
  w("  return v;")
  w("}")
  w("")

  w("// delta^j in theta coordinates.")
  w("inline const std::vector<std::pair<int, std::vector<const char*>>>& coord_change() {")
  w("  static const std::vector<std::pair<int, std::vector<const char*>>> v{")
  for p in [2, 3]:
    w(f"      {{{p}, {{" + ", ".join(cstr(e) for e in coord_change(p, 3)) + "}},")
  w("  };")
  w("  return v;")
  w("}")
  w("")

  w("// x_k in terms of y for (x)_t = (y)_{u t} over F_3[t], u = 2.")
  w("inline const std::vector<const char*>& rebase_f3() {")
  w("  static const std::vector<const char*> v{" + ", ".join(ft_str(e, 3) for e in rebase_ft(3, t, 2, 3)) + "};")
  w("  return v;")
  w("}")
  w("")

  w("struct NumericCase {")
  w("  int p;")
  w("  const char* op;")
  w("  std::vector<long> a, b, result;")
  w("};")
  w("inline const std::vector<NumericCase>& numeric() {")
  w("  static const std::vector<NumericCase> v{")
  for p, op, a, b in [(2, "sum", [1, 0], [1, 0]), (2, "sum", [1, 2, 3], [4, 5, 6]), (2, "product", [1, 2, 3], [4, 5, 6]),
                      (3, "product", [2, -1], [5, 7]), (2, "negation", [1, 0], [0, 0]), (3, "sum", [1, 1, 1], [2, 2, 2]),
                      (2, "product", [-3, 1, 4], [2, 0, -1])]:
    r = witt_z_numeric(p, op, a, b)
    fmt = lambda l: "{" + ", ".join(map(str, l)) + "}"
    w(f'      {{{p}, "{op}", {fmt(a)}, {fmt(b)}, {fmt(r)}}},')
  w("  };")
  w("  return v;")
  w("}")
  w("")
  w("}  // namespace frozen")
  w("")
  w("#endif  // WITT_TESTS_FROZEN_VALUES_HPP")
  print("\n".join(out))


if __name__ == "__main__":
  main()
