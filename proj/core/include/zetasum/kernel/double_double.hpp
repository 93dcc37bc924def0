// Copyright 2026 The zetasum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Double-double arithmetic: an unevaluated sum hi + lo of two binary64 values
// with |lo| <= ulp(hi)/2, giving about 106 bits (31-32 decimal digits).
//
// Used for oracle evaluations and for floors of irrational thresholds. The
// error-free transformations require unfused floating-point (-ffp-contract=off).

#pragma once

#include <cmath>
#include <cstdint>

namespace zetasum::kernel {

struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DoubleDouble() = default;
  constexpr DoubleDouble(double h) : hi(h) {}  // NOLINT: implicit by design of the arithmetic
  constexpr DoubleDouble(double h, double l) : hi(h), lo(l) {}

  static DoubleDouble from_int(std::int64_t n);

  [[nodiscard]] constexpr double to_double() const { return hi + lo; }
};

namespace dd_detail {

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace dd_detail

inline DoubleDouble operator-(DoubleDouble a) { return {-a.hi, -a.lo}; }

inline DoubleDouble operator+(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = dd_detail::two_sum(a.hi, b.hi);
  const DoubleDouble t = dd_detail::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = dd_detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return dd_detail::quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble operator-(DoubleDouble a, DoubleDouble b) { return a + (-b); }

inline DoubleDouble operator*(DoubleDouble a, DoubleDouble b) {
  DoubleDouble p = dd_detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return dd_detail::quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble operator/(DoubleDouble a, DoubleDouble b) {
  const double q1 = a.hi / b.hi;
  DoubleDouble r = a - b * DoubleDouble(q1);
  const double q2 = r.hi / b.hi;
  r = r - b * DoubleDouble(q2);
  const double q3 = r.hi / b.hi;
  return dd_detail::quick_two_sum(q1, q2) + DoubleDouble(q3);
}

inline DoubleDouble& operator+=(DoubleDouble& a, DoubleDouble b) { return a = a + b; }
inline DoubleDouble& operator-=(DoubleDouble& a, DoubleDouble b) { return a = a - b; }
inline DoubleDouble& operator*=(DoubleDouble& a, DoubleDouble b) { return a = a * b; }
inline DoubleDouble& operator/=(DoubleDouble& a, DoubleDouble b) { return a = a / b; }

inline bool operator<(DoubleDouble a, DoubleDouble b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(DoubleDouble a, DoubleDouble b) { return b < a; }
inline bool operator<=(DoubleDouble a, DoubleDouble b) { return !(b < a); }
inline bool operator>=(DoubleDouble a, DoubleDouble b) { return !(a < b); }
inline bool operator==(DoubleDouble a, DoubleDouble b) { return a.hi == b.hi && a.lo == b.lo; }

inline DoubleDouble DoubleDouble::from_int(std::int64_t n) {
  // Exact for |n| < 2^106; int64 always fits in two doubles.
  const double h = static_cast<double>(n);
  const double l = static_cast<double>(n - static_cast<std::int64_t>(h));
  return dd_detail::quick_two_sum(h, l);
}

DoubleDouble abs(DoubleDouble a);
DoubleDouble floor(DoubleDouble a);
/// Nearest integer, ties away from zero.
DoubleDouble round(DoubleDouble a);
DoubleDouble sqrt(DoubleDouble a);
DoubleDouble exp(DoubleDouble a);
DoubleDouble log(DoubleDouble a);
void sincos(DoubleDouble a, DoubleDouble& s, DoubleDouble& c);
DoubleDouble sin(DoubleDouble a);
DoubleDouble cos(DoubleDouble a);
DoubleDouble atan2(DoubleDouble y, DoubleDouble x);
/// x^e for x > 0.
DoubleDouble pow(DoubleDouble x, DoubleDouble e);

namespace dd_const {
inline constexpr DoubleDouble pi{3.141592653589793116e+00, 1.224646799147353207e-16};
inline constexpr DoubleDouble two_pi{6.283185307179586232e+00, 2.449293598294706414e-16};
inline constexpr DoubleDouble half_pi{1.570796326794896558e+00, 6.123233995736766036e-17};
inline constexpr DoubleDouble ln2{6.931471805599452862e-01, 2.319046813846299558e-17};
}  // namespace dd_const

}  // namespace zetasum::kernel
