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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "zetasum/asymptotics.hpp"

using namespace zetasum;
using namespace zetasum::asymptotics;

namespace {

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(Chi, FrozenValues) {
  EXPECT_LT(rel_err(chi_exact({0.3, 500.0}), {-2.052170669509572528126752, 1.243858447376300345599973}),
            1e-11);
  EXPECT_LT(rel_err(chi_exact({-0.7, 1000.0}), {-327.0229989330489513456078, 292.4523639598166458892312}),
            1e-11);
}

TEST(Chi, UnitModulusOnCriticalLine) {
  for (double t : {14.0, 100.0, 1234.5, 1e4, 1e5}) {
    EXPECT_NEAR(std::abs(chi_exact({0.5, t})), 1.0, 1e-9) << t;
  }
}

TEST(Chi, ReflectionProperty) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> usig(0.0, 1.0);
  std::uniform_real_distribution<double> ut(-2000.0, 2000.0);
  for (int i = 0; i < 200; ++i) {
    const Complex s{usig(rng), ut(rng)};
    EXPECT_LT(std::abs(chi_exact(s) * chi_exact(1.0 - s) - 1.0), 1e-9) << s;
  }
}

TEST(Chi, AsymptoticAgreesToOrderOneOverT) {
  for (double t : {100.0, 1e3, 1e4, 1e5}) {
    const Complex s{0.5, t};
    EXPECT_LE(std::abs(chi_exact(s) / chi_asymptotic(s) - 1.0), 10.0 / t) << t;
  }
}

TEST(Chi, Errors) {
  EXPECT_THROW(chi_exact({1.0, 0.0}), Error);
  EXPECT_THROW(chi_exact({3.0, 0.0}), Error);
  EXPECT_THROW(chi_asymptotic({0.5, 9.0}), Error);
}

TEST(ZetaReference, FrozenValues) {
  EXPECT_LT(rel_err(zeta_reference({0.3, 100.0}), {3.668075124851715152899193, 0.03145024179027014811794019}),
            1e-11);
  EXPECT_LT(rel_err(zeta_reference({-0.5, 1000.0}), {-123.5406746770995892535265, 90.0000774947022629101743}),
            1e-11);
  EXPECT_LT(std::abs(zeta_reference({0.5, 14.134725}) -
                     Complex(1.7674298413849039149773e-8, -1.11020289309231167471085e-7)),
            1e-13);
  EXPECT_THROW(zeta_reference({1.0, 0.0}), Error);
}

TEST(FunctionalEquation, RelativeResidual) {
  for (double sigma : {0.3, 0.5, 0.7}) {
    for (double t : {100.0, 1000.0, 10000.0}) {
      EXPECT_LE(functional_equation_residual(sigma, t).relative(), 1e-8) << sigma << " " << t;
    }
  }
  EXPECT_THROW(functional_equation_residual(0.5, 1e5), Error);
}

TEST(EtaParams, Ingredients) {
  const double t = 1000.0;
  const double eta = 7.5;
  const auto p = eta_params(0.4, t, eta);
  EXPECT_LT(std::abs(p.alpha - (1.0 - std::polar(1.0, -eta))), 1e-15);
  const double rem = t - eta * std::floor(t / eta);
  EXPECT_NEAR(p.beta.real(), rem, 1e-12);
  EXPECT_NEAR(p.beta.imag(), 0.6, 1e-15);
  EXPECT_NEAR(p.gamma_phase, rem - eta, 1e-12);
  EXPECT_FALSE(p.near_resonance);
  EXPECT_TRUE(eta_params(0.4, t, kTwoPi).near_resonance);
}

TEST(Distance, ToMultiplesOfTwoPi) {
  EXPECT_NEAR(distance_to_2pi_multiple(3.0 * kTwoPi + 0.05), 0.05, 1e-13);
  EXPECT_NEAR(distance_to_2pi_multiple(kPi), kPi, 1e-15);
  EXPECT_NEAR(distance_to_2pi_multiple(kTwoPi - 0.2), 0.2, 1e-14);
}

TEST(ETerm, ValidityWindow) {
  EXPECT_THROW(e_term(0.5, 100.0, 10.5), Error);      // eta >= sqrt(t)
  EXPECT_THROW(e_term(0.5, 100.0, 0.05), Error);      // eta <= epsilon
  EXPECT_THROW(e_term(0.5, 1e4, kTwoPi + 0.01), Error);
  EXPECT_THROW(e_term(1.0, 1e4, 3.0), Error);
  EXPECT_NO_THROW(e_term(0.5, 1e4, 3.0));
}

TEST(ETerm, EnvelopeBranches) {
  const auto low = e_term(0.5, 1e6, 50.0);
  EXPECT_FALSE(low.upper_branch);
  EXPECT_DOUBLE_EQ(low.envelope, 50.0 / 1e6);
  const auto high = e_term(0.5, 1e6, 500.0);
  EXPECT_TRUE(high.upper_branch);
  EXPECT_GT(high.envelope, 0.0);
}

TEST(FlIdentity, ResidualWithinDecayEnvelope) {
  for (double sigma : {0.25, 0.5, 0.75}) {
    const double t = 1e4;
    const auto r = fl_identity_residual(sigma, t, 9.0 * kPi * t);
    EXPECT_LE(std::abs(r.residual), 2.0 * r.envelope) << sigma;
  }
}

TEST(FlIdentity, EmptySumThrows) {
  EXPECT_THROW(fl_identity_residual(0.5, 100.0, 100.0), Error);
}

TEST(FrIdentity, ResidualComparableToEnvelope) {
  const double t = 1e5;
  const auto r = fr_identity_residual(0.5, t, std::exp(1.0), 0.5 * std::sqrt(t));
  EXPECT_LE(std::abs(r.residual), 5.0 * r.envelope);
}

TEST(FrIdentity, EmptyChiSum) {
  const double t = 1e5;
  const auto r = fr_identity_residual(0.5, t, 7.0, 12.0);
  const Complex e_only = e_term(0.5, t, 12.0).value - e_term(0.5, t, 7.0).value;
  EXPECT_LT(std::abs(r.rhs - e_only), 1e-15);
  EXPECT_LE(std::abs(r.residual), 5.0 * r.envelope);
}

TEST(FrIdentity, GuardMessageListsFailures) {
  try {
    fr_identity_residual(0.5, 100.0, kTwoPi, 20.0);
    FAIL() << "expected validity error";
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("eta2 < sqrt(t)"), std::string::npos) << msg;
    EXPECT_NE(msg.find("dist(eta1, 2 pi Z)"), std::string::npos) << msg;
  }
}
