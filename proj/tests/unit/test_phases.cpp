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

#include "zetasum/kernel/oracle.hpp"
#include "zetasum/phases.hpp"

using namespace zetasum;

namespace {

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST(PhaseEval, ClosedForms) {
  EXPECT_NEAR(phases::phase_eval(PhaseKind::F1, 4.0, 4), 4.0 * std::log(2.0), 1e-15);
  EXPECT_NEAR(phases::phase_eval(PhaseKind::F2, 4.0, 4), 4.0 * std::log(2.0), 1e-15);
  EXPECT_EQ(phases::phase_eval(PhaseKind::F3, 123.4, 1), 0.0);
  EXPECT_THROW(phases::phase_eval(PhaseKind::F3, 1.0, 0), Error);
}

TEST(PhaseEval, SmallRatioKeepsPrecision) {
  // t ln(1 + m/t) ~ m - m^2/(2t) for m << t.
  const double t = 1e7;
  EXPECT_NEAR(phases::phase_eval(PhaseKind::F2, t, 1), 1.0 - 0.5 / t + 1.0 / (3.0 * t * t), 1e-15);
}

TEST(PhaseKindNames, RoundTrip) {
  for (auto k : {PhaseKind::F1, PhaseKind::F2, PhaseKind::F3}) {
    EXPECT_EQ(phase_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(phase_kind_from_string("F4"), Error);
}

TEST(SingleSum, UnitTermsAtZeroT) {
  EXPECT_EQ(phases::single_sum({PhaseKind::F3, 0.0, 0.0, 1, 7, false}), Complex(7.0, 0.0));
}

TEST(SingleSum, EmptyRangeIsZero) {
  EXPECT_EQ(phases::single_sum({PhaseKind::F3, 0.5, 10.0, 5, 4, false}), Complex(0.0, 0.0));
  EXPECT_THROW(phases::single_sum({PhaseKind::F3, 0.5, 10.0, 5, 2, false}), Error);
}

TEST(SingleSum, FrozenValues) {
  const Complex f3 = phases::single_sum({PhaseKind::F3, 0.5, 100.0, 1, 100, false});
  EXPECT_LT(rel_err(f3, {2.767098710562079443055628, 0.09369732797829901582277354}), 1e-13);
  const Complex d = phases::single_sum({PhaseKind::F1, 0.5, 100.0, 1, 100, false});
  EXPECT_LT(rel_err(d, {-3.485343075478222909574093, 0.2563256809661147531034254}), 1e-13);
  const Complex f2 = phases::single_sum({PhaseKind::F2, 0.0, 1000.0, 1, 1000, false});
  EXPECT_LT(rel_err(f2, {1.074710207691035295529601, 2.181549555026654815813408}), 1e-12);
  EXPECT_LE(std::abs(f2), 10.0);
}

TEST(SingleSum, ConjugateFlipsImaginaryPart) {
  const Complex a = phases::single_sum({PhaseKind::F1, 0.3, 500.0, 3, 400, false});
  const Complex b = phases::single_sum({PhaseKind::F1, 0.3, 500.0, 3, 400, true});
  EXPECT_LT(std::abs(a - std::conj(b)), 1e-13);
}

TEST(SingleSum, ExponentWindow) {
  EXPECT_THROW(phases::single_sum({PhaseKind::F3, -2.5, 10.0, 1, 10, false}), Error);
  EXPECT_NO_THROW(phases::single_sum({PhaseKind::F3, -2.0, 10.0, 1, 10, false}));
}

TEST(SingleSum, ExtendedPrecisionRoutesToOracle) {
  const SumSpec spec{PhaseKind::F2, 0.7, 2000.0, 10, 1500, true};
  const Complex ext = phases::single_sum(spec, Precision::extended);
  EXPECT_EQ(ext, kernel::oracle_recompute(spec).to_complex());
}

// Random specs up to 1e5 terms against the double-double oracle.
TEST(SingleSumProperty, MatchesOracle) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_real_distribution<double> usig(-1.0, 2.0);
  std::uniform_real_distribution<double> ulogt(0.0, 7.0);
  std::uniform_real_distribution<double> ulogn(0.0, 5.0);
  std::bernoulli_distribution conj(0.5);
  for (int i = 0; i < 1000; ++i) {
    SumSpec s;
    s.phase = static_cast<PhaseKind>(kind(rng));
    s.sigma = usig(rng);
    s.t = std::pow(10.0, ulogt(rng));
    s.lo = static_cast<Index>(std::pow(10.0, ulogn(rng) - 1.0)) + 1;
    s.hi = s.lo + static_cast<Index>(std::pow(10.0, ulogn(rng))) - 1;
    s.conjugate = conj(rng);
    const Complex want = kernel::oracle_recompute(s).to_complex();
    const Complex got = phases::single_sum(s);
    ASSERT_LE(std::abs(got - want), 1e-10 * std::max(std::abs(want), 1e-300))
        << to_string(s.phase) << " sigma=" << s.sigma << " t=" << s.t << " [" << s.lo << "," << s.hi << "]";
  }
}

TEST(DDeltaSum, FrozenValue) {
  const Complex d = phases::d_delta_sum(0.0, 16.0, 0.5);
  EXPECT_LT(rel_err(d, {-0.09853817752943220959378586, 0.04034882185643237573929152}), 1e-13);
  const Complex e = phases::d_delta_sum(0.0, 16.0, 0.5, Precision::extended);
  EXPECT_LT(rel_err(e, {-0.09853817752943220959378586, 0.04034882185643237573929152}), 1e-15);
}

TEST(DDeltaSum, SingleTerm) {
  const double t = 1e6;
  const Complex d = phases::d_delta_sum(1.0, t, 0.01);
  kernel::DoubleDouble s;
  kernel::DoubleDouble c;
  kernel::sincos(kernel::phase_dd(PhaseKind::F1, t, 1), s, c);
  EXPECT_LT(std::abs(d - Complex(c.to_double(), s.to_double())), 1e-12);
}

TEST(DDeltaSum, Domain) {
  EXPECT_THROW(phases::d_delta_sum(0.5, 100.0, 1.0), Error);
  EXPECT_THROW(phases::d_delta_sum(0.5, 1.0, 0.5), Error);
}

TEST(PrefixTable, SmallTable) {
  const auto p = phases::build_prefix(0.0, 0.0, false, 3);
  ASSERT_EQ(p.upper(), 3);
  for (Index k = 0; k <= 3; ++k) EXPECT_EQ(p.at(k), Complex(static_cast<double>(k), 0.0));
  EXPECT_EQ(p.range(2, 3), Complex(2.0, 0.0));
  EXPECT_EQ(p.range(3, 2), Complex(0.0, 0.0));
  EXPECT_THROW((void)p.range(2, 4), Error);
}

TEST(PrefixTable, SignConvention) {
  const auto p = phases::build_prefix(0.5, 10.0, false, 2);
  EXPECT_LT(std::abs(p.range(2, 2) - std::pow(2.0, Complex(-0.5, -10.0))), 1e-15);
  const auto q = phases::build_prefix(0.5, 10.0, true, 2);
  EXPECT_LT(std::abs(q.range(2, 2) - std::pow(2.0, Complex(-0.5, 10.0))), 1e-15);
}

TEST(PrefixTable, RangesMatchOracle) {
  const auto p = phases::build_prefix(0.5, 1000.0, false, 100000);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Index> u(1, 100000);
  for (int i = 0; i < 100; ++i) {
    Index a = u(rng);
    Index b = u(rng);
    if (a > b) std::swap(a, b);
    // n^{-1/2 - 1000 i} is the conjugate F3 term.
    const Complex want = kernel::oracle_recompute({PhaseKind::F3, 0.5, 1000.0, a, b, true}).to_complex();
    EXPECT_LE(std::abs(p.range(a, b) - want), 1e-9 * std::abs(want)) << a << ".." << b;
  }
}

TEST(PrefixTable, Budget) {
  EXPECT_THROW(phases::build_prefix(0.5, 1.0, false, 30000000), BudgetError);
}

TEST(CRatio, KnownValues) {
  // r = x/t = 1/2, k = 2: (1 + 2 r) / (1 + 2 r + r^2) = 2 / 2.25.
  EXPECT_NEAR(phases::c_ratio(50.0, 100.0, 2), 2.0 / 2.25, 1e-15);
  EXPECT_NEAR(phases::c_ratio(1.0, 1e12, 3), 1.0, 1e-11);
  EXPECT_NEAR(phases::c_ratio(100.0 - 1e-9, 100.0, 2), 0.75, 1e-9);
}

TEST(CRatio, Errors) {
  EXPECT_THROW(phases::c_ratio(100.0, 100.0, 2), Error);
  EXPECT_THROW(phases::c_ratio(10.0, 100.0, 1), Error);
  EXPECT_THROW(phases::c_ratio(0.0, 100.0, 2), Error);
}

TEST(CRatioProperty, StrictlyInsideBounds) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> ulogt(0.5, 8.0);
  std::uniform_real_distribution<double> frac(1e-6, 1.0 - 1e-6);
  for (int i = 0; i < 5000; ++i) {
    const double t = std::pow(10.0, ulogt(rng));
    const double x = 1.0 + (t - 1.0) * frac(rng);
    const int k = 2 + i % 7;
    const double c = phases::c_ratio(x, t, k);
    ASSERT_GT(c, 1.0 - std::ldexp(1.0, -k)) << x << " " << t << " " << k;
    // 1 - C = (r / (1 + r))^k, which is below binary64 resolution for small r.
    const double gap = std::pow(x / (x + t), k);
    ASSERT_LE(c, 1.0) << x << " " << t << " " << k;
    if (gap > 1e-12) {
      ASSERT_LT(c, 1.0) << x << " " << t << " " << k;
    }
    ASSERT_NEAR(1.0 - c, gap, 1e-15) << x << " " << t << " " << k;
  }
}
