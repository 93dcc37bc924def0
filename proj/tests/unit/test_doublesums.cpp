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
#include <vector>

#include "zetasum/doublesums.hpp"
#include "zetasum/kernel/oracle.hpp"

using namespace zetasum;
using namespace zetasum::doublesums;
using kernel::ComplexDD;

namespace {

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

// n^{-w} for n = 0..upper in double-double (entry 0 unused).
std::vector<ComplexDD> power_table_dd(Complex w, Index upper) {
  std::vector<ComplexDD> out(static_cast<std::size_t>(upper + 1));
  for (Index n = 1; n <= upper; ++n) out[static_cast<std::size_t>(n)] = kernel::power_dd(n, w);
  return out;
}

const ComplexDD& at(const std::vector<ComplexDD>& v, Index i) { return v[static_cast<std::size_t>(i)]; }

Complex pow_neg(double base, Complex w) { return std::pow(base, -w); }

}  // namespace

TEST(GridDoubleSum, ProductOfConjugatesIsReal) {
  const auto r = grid_double_sum(1.0, 2.0);
  const Complex a = 1.0 + pow_neg(2.0, {1.0, 2.0});
  EXPECT_LE(std::abs(r.value.imag()), 1e-15);
  EXPECT_NEAR(r.value.real(), std::norm(a), 1e-15);
}

TEST(GridDoubleSum, MatchesOracle) {
  const double t = 1000.0;
  const Complex s(0.5, t);
  const auto a = power_table_dd(s, 1000);
  const auto b = power_table_dd(std::conj(s), 1000);
  ComplexDD want;
  for (Index m = 1; m <= 1000; ++m) {
    for (Index n = 1; n <= 1000; ++n) want += at(a, m) * at(b, n);
  }
  const auto pf = grid_double_sum(0.5, t);
  EXPECT_LE(rel_err(pf.value, want.to_complex()), 1e-10);
  EXPECT_EQ(pf.term_count, 1000 * 1000);
  const auto bf = grid_double_sum(0.5, t, Strategy::BruteForce);
  EXPECT_LE(rel_err(bf.value, want.to_complex()), 1e-10);
  EXPECT_EQ(bf.strategy, Strategy::BruteForce);
}

TEST(FSum, SmallCases) {
  const Complex u(0.3, 4.0);
  const Complex v(-0.2, 7.5);
  EXPECT_LT(std::abs(f_sum(u, v, 1) - pow_neg(2.0, v)), 1e-15);
  EXPECT_LT(std::abs(f_sum(0.0, 0.0, 2) - Complex(4.0, 0.0)), 1e-15);
}

TEST(FSum, MatchesOracle) {
  const Complex u(0.5, 3.0);
  const Complex v(1.2, -3.0);
  const Index n = 100;
  const auto a = power_table_dd(u, n);
  const auto b = power_table_dd(v, 2 * n);
  ComplexDD want;
  for (Index m1 = 1; m1 <= n; ++m1) {
    for (Index m2 = 1; m2 <= n; ++m2) want += at(a, m1) * at(b, m1 + m2);
  }
  EXPECT_LE(rel_err(f_sum(u, v, n), want.to_complex()), 1e-12);
  EXPECT_LE(rel_err(f_sum(u, v, n, Strategy::BruteForce), want.to_complex()), 1e-12);
}

TEST(FSum, FrozenValue) {
  EXPECT_LE(rel_err(f_sum({0.5, 3.0}, {1.2, -3.0}, 100), {-0.5503347662081948764726381, 3.801533318239765287526043}),
            1e-12);
}

TEST(GSum, SmallCases) {
  const Complex u(0.3, 4.0);
  const Complex v(-0.2, 7.5);
  EXPECT_LT(std::abs(g_sum(u, v, 1) - pow_neg(2.0, v)), 1e-15);
  EXPECT_LT(std::abs(g_sum(0.0, 0.0, 2) - Complex(3.0, 0.0)), 1e-15);
}

TEST(GSum, MatchesOracle) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ure(-1.0, 2.0);
  std::uniform_real_distribution<double> uim(-100.0, 100.0);
  const Index n = 500;
  for (int trial = 0; trial < 3; ++trial) {
    const Complex u(ure(rng), uim(rng));
    const Complex v(ure(rng), uim(rng));
    const auto a = power_table_dd(u, n);
    const auto b = power_table_dd(v, 2 * n);
    ComplexDD want;
    for (Index m = 1; m <= n; ++m) {
      for (Index k = n + 1; k <= n + m; ++k) want += at(a, m) * at(b, k);
    }
    EXPECT_LE(rel_err(g_sum(u, v, n), want.to_complex()), 1e-10) << u << " " << v;
  }
}

TEST(GSum, FrozenValue) {
  EXPECT_LE(rel_err(g_sum({0.3, -7.0}, {0.9, 2.0}, 500), {-10.66255664752989980639119, -9.784154785594959848021391}),
            1e-12);
}

TEST(FgIdentity, HandCountable) {
  const auto r = fg_identity_residual(0.0, 0.0, 2);
  EXPECT_EQ(r.lhs, Complex(10.0, 0.0));
  EXPECT_EQ(r.rhs, Complex(10.0, 0.0));
  EXPECT_EQ(r.residual, Complex(0.0, 0.0));
}

TEST(FgIdentity, SingleTermClosedForm) {
  const Complex u(0.9, -12.0);
  const Complex v(-0.4, 3.0);
  const auto r = fg_identity_residual(u, v, 1);
  EXPECT_LT(std::abs(r.lhs - (pow_neg(2.0, v) + pow_neg(2.0, u) + 1.0)), 1e-15);
  EXPECT_LT(std::abs(r.residual), 1e-15);
}

TEST(FgIdentity, LargeN) {
  const auto r = fg_identity_residual({0.7, 50.0}, {0.2, -11.0}, 10000);
  EXPECT_LE(r.relative(), 1e-10);
}

TEST(FgIdentityProperty, VanishesToRounding) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ure(-2.0, 2.0);
  std::uniform_real_distribution<double> uim(-50.0, 50.0);
  std::uniform_int_distribution<Index> un(1, 3000);
  for (int i = 0; i < 100; ++i) {
    const Complex u(ure(rng), uim(rng));
    const Complex v(ure(rng), uim(rng));
    const Index n = un(rng);
    ASSERT_LE(fg_identity_residual(u, v, n).relative(), 1e-10) << u << " " << v << " " << n;
  }
}

TEST(TailDoubleSum, SingleTerm) {
  const Complex s(0.5, 1.5);
  EXPECT_LT(std::abs(tail_double_sum(0.5, 1.5) - pow_neg(2.0, s)), 1e-15);
}

TEST(TailDoubleSum, MatchesOracle) {
  const double t = 1000.0;
  const Complex s(0.5, t);
  const auto a = power_table_dd(std::conj(s), 1000);
  const auto b = power_table_dd(s, 2000);
  ComplexDD want;
  for (Index m = 1; m <= 1000; ++m) {
    for (Index n = 1001; n <= 1000 + m; ++n) want += at(a, m) * at(b, n);
  }
  EXPECT_LE(rel_err(tail_double_sum(0.5, t), want.to_complex()), 1e-10);
  EXPECT_LE(rel_err(tail_double_sum(0.5, t, Strategy::BruteForce), want.to_complex()), 1e-10);
}

TEST(TailRelation, ExactRelation) {
  EXPECT_LE(std::abs(tail_relation_check(0.5, 1.5).residual), 1e-15);
  EXPECT_LE(tail_relation_check(0.5, 500.0).relative(), 1e-9);
  const auto r = tail_relation_check(0.3, 1000.0);
  EXPECT_LE(r.relative(), 1e-9);
  EXPECT_NEAR(r.envelope, std::pow(1000.0, 0.4) / 0.4, 1e-9);
  EXPECT_THROW(tail_relation_check(0.5, 2e5), Error);
}

TEST(SaSum, SingleTerm) {
  const auto r = sa_sum(-0.5, 1.5, 1.5);
  EXPECT_LT(std::abs(r.value - pow_neg(2.0, {-0.5, 1.5})), 1e-15);
}

TEST(SaSum, MatchesOracle) {
  const double t = 1000.0;
  const auto a = power_table_dd({-0.5, t}, 2000);
  const auto b = power_table_dd({1.5, -t}, 1000);
  ComplexDD want;
  for (Index m1 = 1; m1 <= 1000; ++m1) {
    for (Index m2 = 1; m2 <= 1000; ++m2) want += at(a, m1 + m2) * at(b, m2);
  }
  EXPECT_LE(rel_err(sa_sum(-0.5, 1.5, t).value, want.to_complex()), 1e-10);
  EXPECT_LE(rel_err(sa_sum(-0.5, 1.5, t, Strategy::BruteForce).value, want.to_complex()), 1e-10);
}

TEST(SaSum, ParameterWindow) {
  EXPECT_THROW(sa_sum(0.0, 1.5, 100.0), Error);
  EXPECT_THROW(sa_sum(-0.5, 1.0, 100.0), Error);
}

TEST(MordellTornheim, SingleTerm) {
  const auto r = mordell_tornheim_sum(-0.7, 0.3, 1.0, 1.5, Strategy::BruteForce);
  const Complex want = pow_neg(2.0, {-0.7, 1.5});
  EXPECT_LT(std::abs(r.total.value - want), 1e-15);
  ASSERT_TRUE(r.parts_computed);
  EXPECT_LT(std::abs(r.part1 - want), 1e-15);
  EXPECT_EQ(r.part2, Complex(0.0, 0.0));
}

TEST(MordellTornheim, OrderExchange) {
  const auto r = mordell_tornheim_sum(-0.7, 0.3, 1.0, 200.0, Strategy::BruteForce);
  ASSERT_TRUE(r.parts_computed);
  EXPECT_LE(rel_err(r.part1_exchanged, r.part1), 1e-12);
  EXPECT_LE(rel_err(r.part1 + r.part2, r.total.value), 1e-12);
}

TEST(MordellTornheim, StrategiesMatchOracle) {
  const double t = 1000.0;
  const auto a = power_table_dd({-0.7, t}, 2000);
  const auto b = power_table_dd({0.3, -t}, 1000);
  ComplexDD want;
  for (Index m1 = 1; m1 <= 1000; ++m1) {
    ComplexDD row;
    for (Index m2 = 1; m2 <= 1000; ++m2) row += at(a, m1 + m2) * at(b, m2);
    want += row * kernel::DoubleDouble(1.0 / static_cast<double>(m1));
  }
  for (auto strategy : {Strategy::BruteForce, Strategy::Correlation}) {
    EXPECT_LE(rel_err(mordell_tornheim_sum(-0.7, 0.3, 1.0, t, strategy).total.value, want.to_complex()), 1e-9)
        << to_string(strategy);
  }
  EXPECT_THROW(mordell_tornheim_sum(-0.7, 0.3, 1.0, t, Strategy::PrefixFactorized), Error);
}

TEST(MordellTornheim, ParameterWindow) {
  EXPECT_THROW(mordell_tornheim_sum(0.1, 0.3, 1.0, 100.0), Error);
  EXPECT_THROW(mordell_tornheim_sum(-0.7, 1.0, 1.0, 100.0), Error);
  EXPECT_THROW(mordell_tornheim_sum(-0.7, 0.3, 0.9, 100.0), Error);
}

TEST(MSetContains, Boundaries) {
  EXPECT_TRUE(m_set_contains(1, 5, 100.0, 0.5, 0.5));
  EXPECT_FALSE(m_set_contains(1, 9, 100.0, 0.5, 0.5));
  EXPECT_FALSE(m_set_contains(100, 1, 100.0, 0.5, 0.5));
  EXPECT_THROW(m_set_contains(1, 5, 100.0, 0.0, 0.5), Error);
  EXPECT_THROW(m_set_contains(1, 5, 100.0, 0.5, 1.0), Error);
  EXPECT_THROW(m_set_contains(0, 5, 100.0, 0.5, 0.5), Error);
}

TEST(MSetProperty, RowLimitsAgreeWithPredicate) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ulogt(1.0, 4.0);
  std::uniform_real_distribution<double> udelta(0.05, 0.95);
  for (int i = 0; i < 40; ++i) {
    const double t = std::pow(10.0, ulogt(rng));
    const MSet set(t, udelta(rng), udelta(rng));
    const Index rows = std::min<Index>(set.size(), 200);
    for (Index m1 = 1; m1 <= rows; ++m1) {
      const Index lo = set.lower_cut(m1);
      const Index hi = set.upper_start(m1);
      for (Index m2 = 1; m2 <= set.size(); ++m2) {
        ASSERT_EQ(set.contains(m1, m2), m2 > lo && m2 < hi) << t << " " << m1 << " " << m2;
      }
    }
  }
}

TEST(Decomposition, PartitionAtT50) {
  const auto r = m_set_decomposition(0.5, 50.0, 0.4, 0.4);
  EXPECT_TRUE(r.partition_exact);
  EXPECT_EQ(r.uncovered_cells, 0);
  EXPECT_EQ(r.overlap_cells, 0);
  EXPECT_EQ(r.grid_cells, 50 * 50);
  EXPECT_EQ(r.m_cells + r.s1_cells + r.s2_cells, r.grid_cells);
  EXPECT_LE(r.residual.relative(), 1e-13);
}

TEST(Decomposition, ResidualAtT200) {
  const auto r = m_set_decomposition(0.5, 200.0, 0.3, 0.3);
  EXPECT_TRUE(r.partition_exact);
  EXPECT_LE(r.residual.relative(), 1e-10);
}

TEST(Decomposition, EmptyLiteralS1Range) {
  // [t / (t^{1 - delta3} - 1)] - 1 = [4 / 2.48] - 1 = 0 rows, yet (1, 3) and
  // (1, 4) lie above the M cut, so only the partitioned S1 keeps the identity.
  const auto r = m_set_decomposition(0.5, 4.0, 0.3, 0.1);
  EXPECT_EQ(r.literal_s1_rows, 0);
  EXPECT_EQ(r.s1_cells, 2);
  EXPECT_GE(r.literal_missing_cells, r.s1_cells);
  EXPECT_GT(std::abs(r.literal_residual), 0.1);
  EXPECT_TRUE(r.partition_exact);
  EXPECT_EQ(r.m_cells + r.s1_cells + r.s2_cells, r.grid_cells);
  EXPECT_LE(r.residual.relative(), 1e-15);
}

TEST(Decomposition, DomainAndBudget) {
  EXPECT_THROW(m_set_decomposition(0.5, 100.0, 0.5, 0.3), Error);
  EXPECT_THROW(m_set_decomposition(0.5, 100.0, 0.3, 0.0), Error);
  EXPECT_THROW(m_set_decomposition(0.5, 1e5, 0.3, 0.3), BudgetError);
}

TEST(S1SplitSum, SingleRow) {
  // [10^0.1] = 1, [10^0.9] = 7: n runs over 8..11.
  const Complex sbar(0.5, -10.0);
  const auto r = s1_split_sum(0.5, 10.0, 0.1);
  ComplexDD sa;
  for (Index n = 8; n <= 10; ++n) sa += kernel::power_dd(n, sbar);
  EXPECT_LT(std::abs(r.sa - sa.to_complex()), 1e-15);
  EXPECT_LT(std::abs(r.sb - kernel::power_dd(11, sbar).to_complex()), 1e-15);
  EXPECT_LT(std::abs(r.total - (r.sa + r.sb)), 1e-15);
}

TEST(S1SplitSum, MatchesOracle) {
  const double t = 1000.0;
  const Complex s(0.5, t);
  const auto a = power_table_dd(s, 10);
  const auto b = power_table_dd(std::conj(s), 1010);
  const double p = std::pow(t, 0.7);
  ComplexDD want_a;
  ComplexDD want_b;
  for (Index m = 1; m <= 7; ++m) {
    const auto first = static_cast<Index>(std::floor(p * static_cast<double>(m))) + 1;
    for (Index n = first; n <= 1000; ++n) want_a += at(a, m) * at(b, n);
    for (Index n = 1001; n <= 1000 + m; ++n) want_b += at(a, m) * at(b, n);
  }
  const auto r = s1_split_sum(0.5, t, 0.3);
  EXPECT_LE(rel_err(r.total, (want_a + want_b).to_complex()), 1e-10);
  EXPECT_LE(rel_err(r.sa, want_a.to_complex()), 1e-10);
  EXPECT_LE(rel_err(r.sb, want_b.to_complex()), 1e-10);
}

TEST(S2SplitSum, LOfT) {
  const auto r = s2_split_sum(0.5, 100.0, 0.5);
  EXPECT_EQ(r.l_of_t, 91);
  EXPECT_TRUE(r.delta_warning);
  EXPECT_TRUE(r.l_of_t_verified);
}

TEST(S2SplitSum, MatchesOracle) {
  const double t = 1000.0;
  const Complex s(0.5, t);
  const auto a = power_table_dd(s, 1000);
  const auto b = power_table_dd(std::conj(s), 1010);
  const double x = std::pow(t, -0.7);
  ComplexDD want_a;
  ComplexDD want_b;
  for (Index m = 125; m <= 1000; ++m) {
    const auto last = static_cast<Index>(std::floor(static_cast<double>(m) * (1.0 + x)));
    for (Index n = m + 1; n <= last; ++n) (n <= 1000 ? want_a : want_b) += at(a, m) * at(b, n);
  }
  const auto r = s2_split_sum(0.5, t, 0.3);
  EXPECT_FALSE(r.delta_warning);
  EXPECT_TRUE(r.l_of_t_verified);
  EXPECT_LE(rel_err(r.total, (want_a + want_b).to_complex()), 1e-10);
  EXPECT_LE(rel_err(r.sa, want_a.to_complex()), 1e-10);
  EXPECT_LE(std::abs(r.sb - want_b.to_complex()), 1e-10 * std::abs(r.total));
}

// BruteForce against PrefixFactorized on random (sigma, t).
TEST(StrategyProperty, BruteForceAgreesWithPrefix) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> usig(0.0, 1.0);
  std::uniform_real_distribution<double> ut(2.0, 1000.0);
  std::uniform_real_distribution<double> udelta(0.1, 0.45);
  auto check = [](Complex bf, Complex pf, const char* what, double sigma, double t) {
    ASSERT_LE(std::abs(bf - pf), 1e-9 * std::max(std::abs(bf), 1e-300)) << what << " " << sigma << " " << t;
  };
  for (int i = 0; i < 50; ++i) {
    const double sigma = usig(rng);
    const double t = ut(rng);
    const double delta = udelta(rng);
    const auto n = static_cast<Index>(t);
    const Complex s(sigma, t);
    check(grid_double_sum(sigma, t, Strategy::BruteForce).value, grid_double_sum(sigma, t).value, "grid", sigma, t);
    check(tail_double_sum(sigma, t, Strategy::BruteForce), tail_double_sum(sigma, t), "tail", sigma, t);
    check(sa_sum(sigma - 1.0, sigma + 1.0, t, Strategy::BruteForce).value, sa_sum(sigma - 1.0, sigma + 1.0, t).value,
          "sa", sigma, t);
    check(f_sum(s, std::conj(s), n, Strategy::BruteForce), f_sum(s, std::conj(s), n), "f", sigma, t);
    check(g_sum(s, std::conj(s), n, Strategy::BruteForce), g_sum(s, std::conj(s), n), "g", sigma, t);
    check(s1_split_sum(sigma, t, delta, Strategy::BruteForce).total, s1_split_sum(sigma, t, delta).total, "s1", sigma,
          t);
    check(s2_split_sum(sigma, t, delta, Strategy::BruteForce).total, s2_split_sum(sigma, t, delta).total, "s2", sigma,
          t);
  }
}

TEST(Budget, RefusesOversizedEnumeration) {
  EXPECT_THROW(grid_double_sum(0.5, 1e5, Strategy::BruteForce), BudgetError);
  EXPECT_THROW(grid_double_sum(0.5, 2e7), BudgetError);
  EXPECT_THROW(f_sum(0.5, 0.5, 200000, Strategy::BruteForce), BudgetError);
}
