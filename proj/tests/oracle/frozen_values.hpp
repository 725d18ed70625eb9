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

// Generated by tests/oracle/gen_frozen.py; do not edit.
#ifndef WITT_TESTS_FROZEN_VALUES_HPP
#define WITT_TESTS_FROZEN_VALUES_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace frozen {

struct StructCase {
  const char* base;
  const char* pi;
  unsigned n;
  const char* op;
  std::vector<const char*> polys;
};

inline const std::vector<StructCase>& structural() {
  static const std::vector<StructCase> v{
      {"Z", "2", 2, "sum", {"a0+b0", "-a0*b0+a1+b1", "-a0^3*b0-2*a0^2*b0^2+a0*a1*b0-a0*b0^3+a0*b0*b1-a1*b1+a2+b2"}},
      {"Z", "2", 2, "product", {"a0*b0", "a0^2*b1+a1*b0^2+2*a1*b1", "a0^4*b2-a0^2*a1*b0^2*b1-2*a0^2*a1*b1^2-2*a1^2*b0^2*b1-a1^2*b1^2+2*a1^2*b2+a2*b0^4+2*a2*b1^2+4*a2*b2"}},
      {"Z", "2", 2, "negation", {"-a0", "-a0^2-a1", "-a0^4-a0^2*a1-a1^2-a2"}},
      {"Z", "2", 2, "frobenius", {"a0^2+2*a1", "-2*a0^2*a1-a1^2+2*a2"}},
      {"Z", "3", 1, "sum", {"a0+b0", "-a0^2*b0-a0*b0^2+a1+b1"}},
      {"Z", "3", 1, "product", {"a0*b0", "a0^3*b1+a1*b0^3+3*a1*b1"}},
      {"Z", "3", 1, "negation", {"-a0", "-a1"}},
      {"Z", "3", 2, "sum", {"a0+b0", "-a0^2*b0-a0*b0^2+a1+b1", "-a0^8*b0-4*a0^7*b0^2-9*a0^6*b0^3-13*a0^5*b0^4-a0^4*a1*b0^2-13*a0^4*b0^5-a0^4*b0^2*b1-2*a0^3*a1*b0^3-9*a0^3*b0^6-2*a0^3*b0^3*b1+a0^2*a1^2*b0-a0^2*a1*b0^4+2*a0^2*a1*b0*b1-4*a0^2*b0^7-a0^2*b0^4*b1+a0^2*b0*b1^2+a0*a1^2*b0^2+2*a0*a1*b0^2*b1-a0*b0^8+a0*b0^2*b1^2-a1^2*b1-a1*b1^2+a2+b2"}},
      {"Z", "3", 2, "frobenius", {"a0^3+3*a1", "-3*a0^6*a1-9*a0^3*a1^2-8*a1^3+3*a2"}},
      {"Z", "5", 1, "sum", {"a0+b0", "-a0^4*b0-2*a0^3*b0^2-2*a0^2*b0^3-a0*b0^4+a1+b1"}},
      {"Z", "5", 1, "product", {"a0*b0", "a0^5*b1+a1*b0^5+5*a1*b1"}},
      {"Fp[t]:2", "t", 2, "sum", {"a0+b0", "a1+b1", "a2+b2"}},
      {"Fp[t]:2", "t", 2, "product", {"a0*b0", "a0^2*b1+a1*b0^2+a1*b1*t", "a0^4*b2+a1^2*b1^2*t+a1^2*b1^2+a1^2*b2*t+a2*b0^4+a2*b1^2*t+a2*b2*t^2"}},
      {"Fp[t]:2", "t", 2, "frobenius", {"a0^2+a1*t", "a1^2*t+a1^2+a2*t"}},
      {"Fp[t]:3", "t", 1, "product", {"a0*b0", "a0^3*b1+a1*b0^3+a1*b1*t"}},
      {"Fp[t]:3", "t", 1, "negation", {"2*a0", "2*a1"}},
      {"Fp[t]:2", "t^2 + t + 1", 1, "product", {"a0*b0", "a0^4*b1+a1*b0^4+a1*b1*t^2+a1*b1*t+a1*b1"}},
      {"Fp[t]:2", "t^2 + t + 1", 1, "frobenius", {"a0^4+a1*t^2+a1*t+a1"}},
  };
  return v;
}

struct BigWittCase {
  std::uint64_t N;
  std::vector<std::uint64_t> set;
  std::vector<const char*> classical_of_nested;  // x_d, d in set order
  std::vector<const char*> nested_of_classical;  // y_d
};

inline const std::vector<BigWittCase>& big_witt() {
  static const std::vector<BigWittCase> v{
      {6, {1, 2, 3, 6}, {"y00", "y10", "y01", "y00^4*y10+2*y00^2*y10^2+y10^3+y11"}, {"x1", "x2", "x3", "-x1^4*x2-2*x1^2*x2^2-x2^3+x6"}},
      {12, {1, 2, 3, 4, 6, 12}, {"y00", "y10", "y01", "y20", "y00^4*y10+2*y00^2*y10^2+y10^3+y11", "y00^8*y20-2*y00^6*y10^3-2*y00^4*y10^4+4*y00^4*y10^2*y20-y00^4*y10*y11+4*y00^4*y20^2-2*y00^2*y10^5-2*y00^2*y10^2*y11+4*y10^4*y20-y10^3*y11+8*y10^2*y20^2+5*y20^3+y21"}, {"x1", "x2", "x3", "x4", "-x1^4*x2-2*x1^2*x2^2-x2^3+x6", "-x1^8*x2^2-x1^8*x4-2*x1^6*x2^3-4*x1^4*x2^4-4*x1^4*x2^2*x4+x1^4*x2*x6-4*x1^4*x4^2-2*x1^2*x2^5+2*x1^2*x2^2*x6+x12-x2^6-4*x2^4*x4+x2^3*x6-8*x2^2*x4^2-5*x4^3"}},
      {18, {1, 2, 3, 6, 9, 18}, {"y00", "y10", "y01", "y00^4*y10+2*y00^2*y10^2+y10^3+y11", "y02", "y00^16*y10+8*y00^14*y10^2+37*y00^12*y10^3+110*y00^10*y10^4+219*y00^8*y10^5-y00^8*y10^2*y11+292*y00^6*y10^6-4*y00^6*y10^3*y11+251*y00^4*y10^7-6*y00^4*y10^4*y11-y00^4*y10*y11^2+126*y00^2*y10^8-4*y00^2*y10^5*y11-2*y00^2*y10^2*y11^2+y01^4*y11+2*y01^2*y11^2+28*y10^9-y10^6*y11-y10^3*y11^2+y11^3+y12"}, {"x1", "x2", "x3", "-x1^4*x2-2*x1^2*x2^2-x2^3+x6", "x9", "-x1^16*x2-8*x1^14*x2^2-36*x1^12*x2^3-104*x1^10*x2^4-204*x1^8*x2^5-2*x1^8*x2^2*x3^2-4*x1^8*x2^2*x6-272*x1^6*x2^6-8*x1^6*x2^3*x3^2-16*x1^6*x2^3*x6-236*x1^4*x2^7-12*x1^4*x2^4*x3^2-24*x1^4*x2^4*x6+x1^4*x2*x3^4+4*x1^4*x2*x3^2*x6+4*x1^4*x2*x6^2-120*x1^2*x2^8-8*x1^2*x2^5*x3^2-16*x1^2*x2^5*x6+2*x1^2*x2^2*x3^4+8*x1^2*x2^2*x3^2*x6+8*x1^2*x2^2*x6^2+x18-27*x2^9-2*x2^6*x3^2-4*x2^6*x6+x2^3*x3^4+4*x2^3*x3^2*x6+4*x2^3*x6^2-x3^4*x6-2*x3^2*x6^2-x6^3"}},
  };
  return v;
}

// C_q(x, y) over Z for pi = q.
inline const std::vector<std::pair<int, const char*>>& c_polys() {
  static const std::vector<std::pair<int, const char*>> v{
      {2, "-x*y"},
      {3, "-x^2*y-x*y^2"},
      {5, "-x^4*y-2*x^3*y^2-2*x^2*y^3-x*y^4"},
      {7, "-x^6*y-3*x^5*y^2-5*x^4*y^3-5*x^3*y^4-3*x^2*y^5-x*y^6"},
  };
  return v;
}

inline const char* c_pair_2_3() { return "-x^4*y+x^3*z-2*x^2*y^2-y^3+z^2"; }
inline const char* c_pair_3_5() { return "-x^12*y+x^10*z-6*x^9*y^2-18*x^6*y^3+5*x^5*z^2-27*x^3*y^4-16*y^5+8*z^3"; }

struct CommutatorSample {
  long a, delta2, delta3, commutator;
};
inline const std::vector<CommutatorSample>& commutators() {
  static const std::vector<CommutatorSample> v{
      {-3, -6, 8, -98},
      {-1, -1, 0, 0},
      {0, 0, 0, 0},
      {1, 0, 0, 0},
      {2, -1, -2, -3},
      {5, -10, -40, -1150},
      {7, -21, -112, -9408},
  };
  return v;
}

// delta^j in theta coordinates.
inline const std::vector<std::pair<int, std::vector<const char*>>>& coord_change() {
  static const std::vector<std::pair<int, std::vector<const char*>>> v{
      {2, {"theta0", "theta1", "-theta0^2*theta1-theta1^2+theta2", "-2*theta0^4*theta1^2-theta0^4*theta2-2*theta0^2*theta1^3+3*theta0^2*theta1*theta2-theta1^4-3*theta2^2+theta3"}},
      {3, {"theta0", "theta1", "-theta0^6*theta1-3*theta0^3*theta1^2-3*theta1^3+theta2", "3*theta0^18*theta1^3-theta0^18*theta2+30*theta0^15*theta1^4+117*theta0^12*theta1^5-10*theta0^12*theta1^2*theta2+251*theta0^9*theta1^6-66*theta0^9*theta1^3*theta2-9*theta0^9*theta2^2+316*theta0^6*theta1^7-144*theta0^6*theta1^4*theta2+10*theta0^6*theta1*theta2^2+219*theta0^3*theta1^8-162*theta0^3*theta1^5*theta2+30*theta0^3*theta1^2*theta2^2+65*theta1^9-82*theta1^6*theta2-30*theta2^3+theta3"}},
  };
  return v;
}

// x_k in terms of y for (x)_t = (y)_{u t} over F_3[t], u = 2.
inline const std::vector<const char*>& rebase_f3() {
  static const std::vector<const char*> v{"y0", "2*y1", "y2", "2*y3"};
  return v;
}

struct NumericCase {
  int p;
  const char* op;
  std::vector<long> a, b, result;
};
inline const std::vector<NumericCase>& numeric() {
  static const std::vector<NumericCase> v{
      {2, "sum", {1, 0}, {1, 0}, {2, -1}},
      {2, "sum", {1, 2, 3}, {4, 5, 6}, {5, 3, -73}},
      {2, "product", {1, 2, 3}, {4, 5, 6}, {4, 57, 44}},
      {3, "product", {2, -1}, {5, 7}, {10, -90}},
      {2, "negation", {1, 0}, {0, 0}, {-1, -1}},
      {3, "sum", {1, 1, 1}, {2, 2, 2}, {3, -3, -2115}},
      {2, "product", {-3, 1, 4}, {2, 0, -1}, {-6, 4, -35}},
  };
  return v;
}

}  // namespace frozen

#endif  // WITT_TESTS_FROZEN_VALUES_HPP
