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

#include "zetasum/asymptotics.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "zetasum/kernel/log_gamma.hpp"
#include "zetasum/phases.hpp"

namespace zetasum::asymptotics {

namespace {

constexpr Complex kI(0.0, 1.0);
constexpr double kLogTwoPi = 1.8378770664093454835606594728112;
constexpr double kLogPi = 1.1447298858494001741434273513531;

// log sin(w) up to a multiple of 2 pi i, stable for large |Im w|.
Complex log_sin(Complex w) {
  if (w.imag() >= 0.0) {
    // sin w = e^{-iw} (1 - e^{2iw}) i/2
    return -kI * w + std::log(1.0 - std::exp(2.0 * kI * w)) + std::log(0.5 * kI);
  }
  // sin w = e^{iw} (1 - e^{-2iw}) / (2i)
  return kI * w + std::log(1.0 - std::exp(-2.0 * kI * w)) - std::log(2.0 * kI);
}

void require_finite(double x) {
  if (!std::isfinite(x)) throw Error("non-finite input");
}

}  // namespace

Complex chi_exact(Complex s) {
  require_finite(s.real());
  require_finite(s.imag());
  const Complex log_gamma = kernel::log_gamma(1.0 - s);
  const Complex w = 0.5 * kPi * s;
  if (1.0 - std::exp((w.imag() >= 0.0 ? 2.0 : -2.0) * kI * w) == 0.0) return {};
  return std::exp(s * kLogTwoPi - kLogPi + log_sin(w) + log_gamma);
}

Complex chi_asymptotic(Complex s) {
  require_finite(s.real());
  if (!(s.imag() >= 10.0)) throw Error("asymptotic regime");
  const double t = s.imag();
  const double log_ratio = std::log(kTwoPi / t);
  const double modulus = std::exp((s.real() - 0.5) * log_ratio);
  const long double phase = static_cast<long double>(t) * std::log(static_cast<long double>(kTwoPi) / t) +
                            static_cast<long double>(t) + 0.25L * kPi;
  return modulus * phases::unit_phase(phase);
}

double distance_to_2pi_multiple(double eta) {
  return std::abs(eta - kTwoPi * std::nearbyint(eta / kTwoPi));
}

EtaParams eta_params(double sigma, double t, double eta) {
  require_finite(sigma);
  require_finite(t);
  require_finite(eta);
  if (!(eta > 0.0)) throw Error("eta_params requires eta > 0");
  if (!(t > 0.0)) throw Error("eta_params requires t > 0");

  EtaParams p;
  p.eta = eta;
  p.sigma = sigma;
  p.t = t;
  p.alpha = 1.0 - std::polar(1.0, -eta);
  const double quotient = std::floor(t / eta);
  const double remainder = std::fma(-eta, quotient, t);
  p.beta = Complex(remainder, -(sigma - 1.0));
  p.gamma_phase = remainder - eta;
  p.near_resonance = distance_to_2pi_multiple(eta) <= 1e-6;
  return p;
}

ETerm e_term(double sigma, double t, double eta, double epsilon) {
  require_finite(sigma);
  require_finite(t);
  require_finite(eta);
  if (!(eta > epsilon && eta < std::sqrt(t))) throw Error("validity window");
  if (!(distance_to_2pi_multiple(eta) > epsilon)) throw Error("validity window");
  if (!(sigma > 0.0 && sigma < 1.0)) throw Error("validity window");

  const EtaParams p = eta_params(sigma, t, eta);
  const Complex a = p.alpha;
  const Complex b = p.beta;
  const Complex bracket =
      1.0 / a + kI / (2.0 * a * a * a) * (eta * eta / t) *
                    ((a * a / (eta * eta)) * (b * b + sigma - 1.0) - 2.0 * a * b / eta - a + 2.0);

  // e^{i gamma} (eta/t)^s, phase assembled in long double.
  const long double log_ratio = std::log(static_cast<long double>(eta) / t);
  const double modulus = std::exp(sigma * static_cast<double>(log_ratio));
  const Complex prefactor =
      modulus * phases::unit_phase(static_cast<long double>(t) * log_ratio + p.gamma_phase);

  ETerm out;
  out.value = prefactor * bracket;
  out.upper_branch = eta >= std::cbrt(t);
  out.envelope = out.upper_branch
                     ? std::exp(-std::abs(a) * t / (eta * eta)) + std::pow(eta, 4) / (t * t)
                     : eta / t;
  return out;
}

IdentityResidual fl_identity_residual(double sigma, double t, double eta) {
  require_finite(sigma);
  require_finite(t);
  require_finite(eta);
  if (!(sigma >= 0.0 && sigma < 1.0)) throw Error("fl identity requires 0 <= sigma < 1");
  if (!(t > 0.0)) throw Error("fl identity requires t > 0");
  const double x = eta / kTwoPi;
  const auto lo = static_cast<Index>(std::floor(t)) + 1;
  const auto hi = static_cast<Index>(std::floor(x));
  if (hi < lo) throw Error("empty sum: [eta/2pi] must exceed [t]");

  IdentityResidual r;
  r.lhs = phases::single_sum({PhaseKind::F3, sigma, t, lo, hi, true});
  const Complex one_minus_s(1.0 - sigma, -t);
  const long double log_x = std::log(static_cast<long double>(x));
  const double modulus = std::exp((1.0 - sigma) * static_cast<double>(log_x));
  r.rhs = modulus * phases::unit_phase(-static_cast<long double>(t) * log_x) / one_minus_s;
  r.residual = r.lhs - r.rhs;
  r.envelope = std::pow(t, -sigma);
  return r;
}

IdentityResidual fr_identity_residual(double sigma, double t, double eta1, double eta2,
                                      double epsilon) {
  require_finite(sigma);
  require_finite(t);
  require_finite(eta1);
  require_finite(eta2);
  std::vector<std::string> failed;
  if (!(eta1 > epsilon)) failed.emplace_back("epsilon < eta1");
  if (!(eta1 < eta2)) failed.emplace_back("eta1 < eta2");
  if (!(eta2 < std::sqrt(t))) failed.emplace_back("eta2 < sqrt(t)");
  if (!(distance_to_2pi_multiple(eta1) > epsilon)) failed.emplace_back("dist(eta1, 2 pi Z) > epsilon");
  if (!(distance_to_2pi_multiple(eta2) > epsilon)) failed.emplace_back("dist(eta2, 2 pi Z) > epsilon");
  if (!(sigma > 0.0 && sigma < 1.0)) failed.emplace_back("0 < sigma < 1");
  if (!failed.empty()) {
    std::string msg = "validity window:";
    for (const auto& f : failed) msg += " " + f + " fails;";
    msg.pop_back();
    throw Error(msg);
  }

  const auto left_lo = static_cast<Index>(std::floor(t / eta2)) + 1;
  const auto left_hi = static_cast<Index>(std::floor(t / eta1));
  const auto right_lo = static_cast<Index>(std::floor(eta1 / kTwoPi)) + 1;
  const auto right_hi = static_cast<Index>(std::floor(eta2 / kTwoPi));

  const ETerm e1 = e_term(sigma, t, eta1, epsilon);
  const ETerm e2 = e_term(sigma, t, eta2, epsilon);
  const Complex s(sigma, t);

  IdentityResidual r;
  r.lhs = phases::single_sum({PhaseKind::F3, sigma, t, left_lo, left_hi, true});
  Complex right{};
  if (right_hi >= right_lo) {
    right = chi_exact(s) * phases::single_sum({PhaseKind::F3, 1.0 - sigma, t, right_lo, right_hi, false});
  }
  r.rhs = right + e2.value - e1.value;
  r.residual = r.lhs - r.rhs;
  r.envelope = e1.envelope + e2.envelope;
  return r;
}

Complex zeta_reference(Complex s) {
  require_finite(s.real());
  require_finite(s.imag());
  if (s == Complex(1.0, 0.0)) throw Error("zeta pole");
  if (std::abs(s.imag()) > 1e5) throw Error("zeta_reference requires |Im s| <= 1e5");

  // B_{2k} / (2k)!
  static constexpr std::array<double, 6> kBernoulliOverFactorial = {
      1.0 / 6.0 / 2.0,          -1.0 / 30.0 / 24.0,   1.0 / 42.0 / 720.0,
      -1.0 / 30.0 / 40320.0,    5.0 / 66.0 / 3628800.0, -691.0 / 2730.0 / 479001600.0};

  const auto n = static_cast<Index>(std::max(20.0, std::ceil(2.0 * std::abs(s.imag()))));
  const Complex head = phases::power_sum(s, 1, n - 1);
  const double log_n = std::log(static_cast<double>(n));
  const Complex n_pow = phases::power_term(n, s);  // N^{-s}

  Complex tail = static_cast<double>(n) * n_pow / (s - 1.0) + 0.5 * n_pow;
  // Corrections B_{2k}/(2k)! * s (s+1) ... (s+2k-2) N^{-s-2k+1}.
  Complex rising = s;
  Complex power = n_pow / static_cast<double>(n);
  const double inv_n2 = std::exp(-2.0 * log_n);
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    tail += kBernoulliOverFactorial[k] * rising * power;
    const double j = 2.0 * static_cast<double>(k) + 1.0;
    rising *= (s + j) * (s + j + 1.0);
    power *= inv_n2;
  }
  return head + tail;
}

IdentityResidual functional_equation_residual(double sigma, double t) {
  if (!(sigma > 0.0 && sigma < 1.0)) throw Error("functional equation check requires 0 < sigma < 1");
  if (!(t >= 10.0 && t <= 1e4)) throw Error("functional equation check requires 10 <= t <= 1e4");
  const Complex s(sigma - 1.0, t);
  IdentityResidual r;
  r.lhs = zeta_reference(s);
  r.rhs = chi_exact(s) * zeta_reference(1.0 - s);
  r.residual = r.lhs - r.rhs;
  r.envelope = std::pow(t, 1.5 - sigma);
  return r;
}

}  // namespace zetasum::asymptotics
