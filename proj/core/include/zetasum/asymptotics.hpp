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
// The chi factor of the zeta functional equation, the E(sigma, t, eta)
// correction kernel, residuals of the two finite-sum zeta identities, and a
// reference Euler-Maclaurin zeta evaluator.

#pragma once

#include "zetasum/common.hpp"

namespace zetasum::asymptotics {

/// Default minimal distance of eta from 2*pi*Z.
inline constexpr double kDefaultEpsilon = 0.1;

struct EtaParams {
  double eta = 0.0;
  Complex alpha;  // 1 - e^{-i eta}
  Complex beta;   // t - eta [t/eta] - i (sigma - 1)
  double gamma_phase = 0.0;  // t - eta - eta [t/eta]
  double sigma = 0.0;
  double t = 0.0;
  /// Set when dist(eta, 2 pi Z) <= 1e-6, where alpha is nearly zero.
  bool near_resonance = false;
};

struct ETerm {
  Complex value;
  /// Size of the error term for this eta: eta/t below t^{1/3},
  /// exp(-|alpha| t/eta^2) + eta^4/t^2 above.
  double envelope = 0.0;
  bool upper_branch = false;
};

struct IdentityResidual {
  Complex lhs;
  Complex rhs;
  Complex residual;
  double envelope = 0.0;

  /// |lhs - rhs| / (|lhs| + 1).
  [[nodiscard]] double relative() const { return std::abs(residual) / (std::abs(lhs) + 1.0); }
};

/// chi(s) = (2 pi)^s / pi * sin(pi s / 2) * Gamma(1 - s), assembled in the log
/// domain. Throws Error("gamma pole") for s = 1, 2, 3, ...
Complex chi_exact(Complex s);

/// Leading term (2 pi / t)^{s - 1/2} e^{i t} e^{i pi / 4}; requires Im s >= 10,
/// otherwise Error("asymptotic regime").
Complex chi_asymptotic(Complex s);

/// Distance from eta to the nearest multiple of 2 pi.
double distance_to_2pi_multiple(double eta);

EtaParams eta_params(double sigma, double t, double eta);

/// E(sigma, t, eta) = e^{i gamma} (eta/t)^s {1/alpha + (i / (2 alpha^3)) (eta^2/t)
///   [(alpha^2/eta^2)(beta^2 + sigma - 1) - 2 alpha beta / eta - alpha + 2]}.
/// Throws Error("validity window") unless epsilon < eta < sqrt(t),
/// dist(eta, 2 pi Z) > epsilon and 0 < sigma < 1.
ETerm e_term(double sigma, double t, double eta, double epsilon = kDefaultEpsilon);

/// Sum over [t] < n <= [eta/2pi] of n^{-s} against (eta/2pi)^{1-s}/(1-s);
/// envelope t^{-sigma}. Throws when [eta/2pi] <= [t].
IdentityResidual fl_identity_residual(double sigma, double t, double eta);

/// Sum over [t/eta2] < n <= [t/eta1] of n^{-s} against
/// chi(s) sum_{[eta1/2pi] < n <= [eta2/2pi]} n^{s-1} + E(eta2) - E(eta1);
/// envelope is the sum of the two E envelopes.
IdentityResidual fr_identity_residual(double sigma, double t, double eta1, double eta2,
                                      double epsilon = kDefaultEpsilon);

/// zeta(s) by Euler-Maclaurin with N = max(20, 2|Im s|) and Bernoulli
/// corrections through B_12. Requires |Im s| <= 1e5 and s != 1.
Complex zeta_reference(Complex s);

/// zeta(s) - chi(s) zeta(1 - s) at s = sigma - 1 + it; envelope t^{3/2 - sigma}.
IdentityResidual functional_equation_residual(double sigma, double t);

}  // namespace zetasum::asymptotics
