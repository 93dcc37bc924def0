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
// Complex numbers over double-double components, for extended-precision
// (oracle) evaluation.

#pragma once

#include "zetasum/common.hpp"
#include "zetasum/kernel/double_double.hpp"

namespace zetasum::kernel {

struct ComplexDD {
  DoubleDouble re;
  DoubleDouble im;

  constexpr ComplexDD() = default;
  constexpr ComplexDD(DoubleDouble r, DoubleDouble i = {}) : re(r), im(i) {}  // NOLINT
  explicit ComplexDD(Complex z) : re(z.real()), im(z.imag()) {}

  [[nodiscard]] Complex to_complex() const { return {re.to_double(), im.to_double()}; }
};

inline ComplexDD operator-(ComplexDD a) { return {-a.re, -a.im}; }
inline ComplexDD operator+(ComplexDD a, ComplexDD b) { return {a.re + b.re, a.im + b.im}; }
inline ComplexDD operator-(ComplexDD a, ComplexDD b) { return {a.re - b.re, a.im - b.im}; }
inline ComplexDD operator*(ComplexDD a, ComplexDD b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ComplexDD operator*(ComplexDD a, DoubleDouble b) { return {a.re * b, a.im * b}; }
inline ComplexDD operator/(ComplexDD a, ComplexDD b) {
  const DoubleDouble den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline ComplexDD& operator+=(ComplexDD& a, ComplexDD b) { return a = a + b; }
inline ComplexDD& operator-=(ComplexDD& a, ComplexDD b) { return a = a - b; }
inline ComplexDD& operator*=(ComplexDD& a, ComplexDD b) { return a = a * b; }

inline ComplexDD conj(ComplexDD a) { return {a.re, -a.im}; }
inline DoubleDouble norm(ComplexDD a) { return a.re * a.re + a.im * a.im; }
inline DoubleDouble abs(ComplexDD a) { return sqrt(norm(a)); }

/// e^{i*phase}.
inline ComplexDD expi(DoubleDouble phase) {
  DoubleDouble s;
  DoubleDouble c;
  sincos(phase, s, c);
  return {c, s};
}

inline ComplexDD exp(ComplexDD z) { return expi(z.im) * exp(z.re); }

/// Principal branch.
inline ComplexDD log(ComplexDD z) { return {log(norm(z)) * DoubleDouble(0.5), atan2(z.im, z.re)}; }

/// n^{-w} for a positive integer n, evaluated as exp(-w ln n).
inline ComplexDD pow_neg(std::int64_t n, ComplexDD w) {
  const DoubleDouble ln = log(DoubleDouble::from_int(n));
  return exp(-(w * ln));
}

}  // namespace zetasum::kernel
