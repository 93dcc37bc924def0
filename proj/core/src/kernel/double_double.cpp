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

#include "zetasum/kernel/double_double.hpp"

#include <cmath>
#include <limits>

namespace zetasum::kernel {

namespace {

constexpr double kTaylorCutoff = 1e-36;

DoubleDouble ldexp(DoubleDouble a, int k) { return {std::ldexp(a.hi, k), std::ldexp(a.lo, k)}; }

// sin and cos of r with |r| <= pi/4 by direct Taylor series.
void sincos_reduced(DoubleDouble r, DoubleDouble& s, DoubleDouble& c) {
  const DoubleDouble r2 = r * r;

  DoubleDouble term = r;
  s = r;
  for (int i = 1; i < 40; ++i) {
    term = -(term * r2) / DoubleDouble(static_cast<double>((2 * i) * (2 * i + 1)));
    s += term;
    if (std::fabs(term.hi) < kTaylorCutoff) break;
  }

  term = DoubleDouble(1.0);
  c = DoubleDouble(1.0);
  for (int i = 1; i < 40; ++i) {
    term = -(term * r2) / DoubleDouble(static_cast<double>((2 * i - 1) * (2 * i)));
    c += term;
    if (std::fabs(term.hi) < kTaylorCutoff) break;
  }
}

}  // namespace

DoubleDouble abs(DoubleDouble a) { return a.hi < 0.0 ? -a : a; }

DoubleDouble floor(DoubleDouble a) {
  const double fh = std::floor(a.hi);
  if (fh != a.hi) return {fh, 0.0};
  return dd_detail::quick_two_sum(fh, std::floor(a.lo));
}

DoubleDouble round(DoubleDouble a) {
  if (a.hi < 0.0) return -floor(-a + DoubleDouble(0.5));
  return floor(a + DoubleDouble(0.5));
}

DoubleDouble sqrt(DoubleDouble a) {
  if (a.hi == 0.0) return {};
  if (a.hi < 0.0) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
  const double s = std::sqrt(a.hi);
  const DoubleDouble sd(s);
  const DoubleDouble residual = a - sd * sd;
  return sd + DoubleDouble(residual.hi / (2.0 * s));
}

DoubleDouble exp(DoubleDouble a) {
  if (a.hi > 709.7) return {std::numeric_limits<double>::infinity(), 0.0};
  if (a.hi < -745.0) return {};
  if (a.hi == 0.0 && a.lo == 0.0) return {1.0};

  const double k = std::nearbyint(a.hi / dd_const::ln2.hi);
  DoubleDouble r = a - dd_const::ln2 * DoubleDouble(k);
  r = ldexp(r, -10);

  // expm1(r) by Taylor, then undo the 2^-10 scaling by repeated squaring of
  // (1 + s): (1 + s)^2 - 1 = 2s + s^2.
  DoubleDouble term = r;
  DoubleDouble s = r;
  for (int i = 2; i < 30; ++i) {
    term = term * r / DoubleDouble(static_cast<double>(i));
    s += term;
    if (std::fabs(term.hi) < kTaylorCutoff) break;
  }
  for (int i = 0; i < 10; ++i) s = ldexp(s, 1) + s * s;

  return ldexp(s + DoubleDouble(1.0), static_cast<int>(k));
}

DoubleDouble log(DoubleDouble a) {
  if (a.hi <= 0.0) return {std::numeric_limits<double>::quiet_NaN(), 0.0};
  // One Newton step on exp(y) = a doubles the 53-bit seed.
  const DoubleDouble y(std::log(a.hi));
  return y + a * exp(-y) - DoubleDouble(1.0);
}

void sincos(DoubleDouble a, DoubleDouble& s, DoubleDouble& c) {
  if (a.hi == 0.0 && a.lo == 0.0) {
    s = {};
    c = {1.0};
    return;
  }
  const double k = std::nearbyint(a.hi / dd_const::two_pi.hi);
  DoubleDouble r = a - dd_const::two_pi * DoubleDouble(k);
  const double j = std::nearbyint(r.hi / dd_const::half_pi.hi);
  r = r - dd_const::half_pi * DoubleDouble(j);

  DoubleDouble sr;
  DoubleDouble cr;
  sincos_reduced(r, sr, cr);

  switch ((static_cast<int>(j) % 4 + 4) % 4) {
    case 0:
      s = sr;
      c = cr;
      break;
    case 1:
      s = cr;
      c = -sr;
      break;
    case 2:
      s = -sr;
      c = -cr;
      break;
    default:
      s = -cr;
      c = sr;
      break;
  }
}

DoubleDouble sin(DoubleDouble a) {
  DoubleDouble s;
  DoubleDouble c;
  sincos(a, s, c);
  return s;
}

DoubleDouble cos(DoubleDouble a) {
  DoubleDouble s;
  DoubleDouble c;
  sincos(a, s, c);
  return c;
}

DoubleDouble atan2(DoubleDouble y, DoubleDouble x) {
  if (x.hi == 0.0 && y.hi == 0.0) return {};
  const DoubleDouble theta(std::atan2(y.hi, x.hi));
  DoubleDouble s;
  DoubleDouble c;
  sincos(theta, s, c);
  // Newton on y cos(theta) - x sin(theta) = 0.
  return theta + (y * c - x * s) / (x * c + y * s);
}

DoubleDouble pow(DoubleDouble x, DoubleDouble e) { return exp(e * log(x)); }

}  // namespace zetasum::kernel
