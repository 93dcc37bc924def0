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

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "zetasum/estlab.hpp"

namespace zetasum::estlab {

namespace {

constexpr unsigned kMaxDepth = 30;
constexpr double kTolerance = 1e-12;

template <typename F>
double integrate(F&& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, kMaxDepth,
                                                                       kTolerance);
}

}  // namespace

double j_integral(Index m1, double t, double sigma1, double sigma2) {
  if (!(sigma1 + sigma2 < 1.0)) throw Error("j_integral requires sigma1 + sigma2 < 1");
  const auto a = static_cast<double>(m1) + 1.0;
  if (m1 < 0 || !(a < t)) throw Error("j_integral requires m1 + 1 < t");
  const auto shift = static_cast<double>(m1);
  // x = e^u flattens the power-law integrand over wide ranges.
  return integrate(
      [&](double u) {
        const double x = std::exp(u);
        return std::pow(shift + x, -sigma1) * std::pow(x, -sigma2) * x;
      },
      std::log(a), std::log(t));
}

double j_bound(Index m1, double t, double sigma1, double sigma2) {
  const double e = 1.0 - sigma1 - sigma2;
  const double a = static_cast<double>(m1) + 1.0;
  return std::pow(2.0, -sigma1) * (std::pow(t, e) - std::pow(a, e)) / e;
}

J2Result j2_integral(double sigma, double t, double delta) {
  if (sigma == 1.0) throw Error("j2_integral: sigma = 1 divides by zero");
  if (!(sigma >= 0.0 && sigma < 1.0)) throw Error("j2_integral requires 0 <= sigma < 1");
  if (!(delta > 0.0 && delta < 1.0)) throw Error("j2_integral requires 0 < delta < 1");
  const double lo = std::pow(t, 1.0 - delta);
  if (!(lo > 1.0)) throw Error("j2_integral requires t^{1-delta} > 1");

  const double q = 1.0 - sigma;
  const double big = q * std::log1p(std::pow(t, delta - 1.0));
  // Inner integral over y in closed form:
  //   x^{1-2 sigma} ((1 + t^{delta-1})^q - (1 + 1/x)^q) / q, q = 1 - sigma,
  // with the difference of powers written as e^B expm1(A - B).
  auto outer = [&](double u) {
    const double x = std::exp(u);
    const double small = q * std::log1p(1.0 / x);
    const double inner = std::pow(x, 1.0 - 2.0 * sigma) * std::exp(small) * std::expm1(big - small) / q;
    return inner * x;
  };

  J2Result r;
  r.numeric = integrate(outer, std::log(lo), std::log(t));
  r.asymptotic = std::pow(t, 1.0 - 2.0 * sigma + delta) / (2.0 * q);
  r.error_scale = std::max(std::pow(t, -2.0 * delta * q), std::pow(t, -delta));
  return r;
}

}  // namespace zetasum::estlab
