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

#include "zetasum/kernel/log_gamma.hpp"

#include <array>
#include <cmath>

namespace zetasum::kernel {

namespace {

// B_{2k} / (2k (2k - 1)) for k = 1..15, as numerator/denominator pairs.
constexpr std::array<std::array<double, 2>, 15> kStirling = {{
    {1.0, 12.0},
    {-1.0, 360.0},
    {1.0, 1260.0},
    {-1.0, 1680.0},
    {1.0, 1188.0},
    {-691.0, 360360.0},
    {1.0, 156.0},
    {-3617.0, 122400.0},
    {43867.0, 244188.0},
    {-174611.0, 125400.0},
    {77683.0, 5796.0},
    {-236364091.0, 1506960.0},
    {657931.0, 300.0},
    {-3392780147.0, 93960.0},
    {1723168255201.0, 2492028.0},
}};

constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;
constexpr double kLogPi = 1.1447298858494001741434273513531;
constexpr double kLn2 = 0.69314718055994530941723212145818;

// Stirling series with ten correction terms; |z| >= 15 keeps the truncation
// below 1e-20.
Complex stirling(Complex z) {
  const Complex w = 1.0 / z;
  const Complex w2 = w * w;
  Complex series = 0.0;
  for (int k = 9; k >= 0; --k) {
    series = series * w2 + kStirling[static_cast<std::size_t>(k)][0] /
                               kStirling[static_cast<std::size_t>(k)][1];
  }
  return (z - 0.5) * std::log(z) - z + kHalfLogTwoPi + series * w;
}

Complex log_gamma_right(Complex z) {
  Complex shift = 0.0;
  while (z.real() < 15.0 && std::abs(z.imag()) < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

// 1 - e^{2 pi i f} without cancellation for small f.
Complex one_minus_exp2pii(Complex f) {
  const double a = -kTwoPi * f.imag();
  const double b = kTwoPi * f.real();
  const double sb = std::sin(0.5 * b);
  const double em1 = std::expm1(a);
  const Complex expm1_value(em1 * std::cos(b) - 2.0 * sb * sb, std::exp(a) * std::sin(b));
  return -expm1_value;
}

// A branch of log sin(pi z) for Im z >= 0 that makes the reflection formula
// land on the principal log Gamma.
Complex log_sin_pi_upper(Complex z) {
  const Complex i(0.0, 1.0);
  const Complex f = z - std::round(z.real());
  return -i * kPi * z - kLn2 + i * (0.5 * kPi) + std::log(one_minus_exp2pii(f));
}

}  // namespace

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw Error("non-finite input");
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw Error("gamma pole");
  }
  if (z.real() >= 0.5) return log_gamma_right(z);

  const Complex log_sin =
      z.imag() >= 0.0 ? log_sin_pi_upper(z) : std::conj(log_sin_pi_upper(std::conj(z)));
  return kLogPi - log_sin - log_gamma_right(1.0 - z);
}

ComplexDD log_gamma_dd(ComplexDD z) {
  if (z.re.hi < 0.5) throw Error("extended log-gamma requires Re z >= 1/2");
  ComplexDD shift;
  while (z.re.hi < 30.0 && std::abs(z.im.hi) < 30.0) {
    shift += log(z);
    z += ComplexDD(DoubleDouble(1.0));
  }

  const ComplexDD w = ComplexDD(DoubleDouble(1.0)) / z;
  const ComplexDD w2 = w * w;
  ComplexDD series;
  for (int k = static_cast<int>(kStirling.size()) - 1; k >= 0; --k) {
    const auto& c = kStirling[static_cast<std::size_t>(k)];
    series = series * w2 + ComplexDD(DoubleDouble(c[0]) / DoubleDouble(c[1]));
  }

  const DoubleDouble half_log_two_pi = log(dd_const::two_pi) * DoubleDouble(0.5);
  return (z - ComplexDD(DoubleDouble(0.5))) * log(z) - z + ComplexDD(half_log_two_pi) +
         series * w - shift;
}

}  // namespace zetasum::kernel
