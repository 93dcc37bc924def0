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
// Finite double sums over integer regions in [1, [t]]^2 and their exact
// identities. Throughout, s = sigma + i t and sbar = sigma - i t.

#pragma once

#include <string_view>

#include "zetasum/asymptotics.hpp"
#include "zetasum/common.hpp"
#include "zetasum/kernel/double_double.hpp"

namespace zetasum::doublesums {

/// Largest [t] (or N) for O(t^2) enumeration.
inline constexpr Index kBruteForceLimit = 30'000;
/// Largest [t] for the FFT correlation path (memory bound).
inline constexpr Index kCorrelationLimit = 4'000'000;

enum class Strategy {
  BruteForce,        // every (m1, m2) term enumerated
  PrefixFactorized,  // inner sums as prefix-table differences
  Correlation,       // FFT cross-correlation (Mordell-Tornheim sum only)
};

std::string_view to_string(Strategy strategy);

struct DoubleSumResult {
  Complex value;
  Index term_count = 0;
  Strategy strategy = Strategy::PrefixFactorized;
};

/// sum_{m,n <= [t]} m^{-s} n^{-sbar} = |sum_{m <= [t]} m^{-s}|^2.
DoubleSumResult grid_double_sum(double sigma, double t,
                                Strategy strategy = Strategy::PrefixFactorized);

/// f(u, v) = sum_{m1, m2 <= N} m1^{-u} (m1 + m2)^{-v}.
Complex f_sum(Complex u, Complex v, Index n, Strategy strategy = Strategy::PrefixFactorized);

/// g(u, v) = sum_{m <= N} sum_{N < n <= N + m} m^{-u} n^{-v}.
Complex g_sum(Complex u, Complex v, Index n, Strategy strategy = Strategy::PrefixFactorized);

/// f(u,v) + f(v,u) + sum m^{-u-v} against (sum m^{-u})(sum n^{-v}) + g(u,v) + g(v,u).
/// The identity is exact, so the residual is pure rounding.
asymptotics::IdentityResidual fg_identity_residual(Complex u, Complex v, Index n);

/// sum_{m <= [t]} sum_{[t] < n <= [t] + m} m^{-sbar} n^{-s}.
Complex tail_double_sum(double sigma, double t, Strategy strategy = Strategy::PrefixFactorized);

/// 2 Re sum_{m1,m2 <= [t]} m2^{-sbar} (m1 + m2)^{-s} - |sum m^{-s}|^2 against
/// -sum m^{-2 sigma} + 2 Re(tail). Envelope is t^{1 - 2 sigma} / (1 - 2 sigma)
/// (0 at sigma = 1/2). Requires t <= 1e5.
asymptotics::IdentityResidual tail_relation_check(double sigma, double t);

/// S_A = sum_{m1, m2 <= [t]} (m1 + m2)^{-sigma1 - it} m2^{-sigma2 + it};
/// requires sigma1 < 0 < 1 < sigma2.
DoubleSumResult sa_sum(double sigma1, double sigma2, double t,
                       Strategy strategy = Strategy::PrefixFactorized);

struct MordellTornheimResult {
  DoubleSumResult total;
  /// Parts over m2 <= m1 and m2 > m1; only filled by BruteForce.
  Complex part1;
  Complex part2;
  /// part1 enumerated with the order of summation exchanged.
  Complex part1_exchanged;
  bool parts_computed = false;
};

/// S_B = sum_{m1, m2 <= [t]} (m1 + m2)^{-sigma1 - it} m2^{-sigma2 + it} m1^{-sigma3};
/// requires sigma1 < 0, 0 < sigma2 < 1, sigma3 >= 1.
MordellTornheimResult mordell_tornheim_sum(double sigma1, double sigma2, double sigma3, double t,
                                           Strategy strategy = Strategy::Correlation);

/// Boundaries of the restricted set
///   M = {1 <= m1, m2 <= [t] : 1/(t^{1-delta2} - 1) < m2/m1 < t^{1-delta3} - 1},
/// decided by cross-multiplied double-double comparisons.
class MSet {
 public:
  MSet(double t, double delta2, double delta3);

  [[nodiscard]] bool contains(Index m1, Index m2) const;
  /// Largest m2 with m2 (t^{1-delta2} - 1) <= m1.
  [[nodiscard]] Index lower_cut(Index m1) const;
  /// Smallest m2 with m2 >= (t^{1-delta3} - 1) m1.
  [[nodiscard]] Index upper_start(Index m1) const;
  [[nodiscard]] Index size() const { return size_; }
  [[nodiscard]] double t() const { return t_; }

 private:
  double t_;
  Index size_;
  kernel::DoubleDouble a_;  // t^{1-delta2} - 1
  kernel::DoubleDouble b_;  // t^{1-delta3} - 1
};

bool m_set_contains(Index m1, Index m2, double t, double delta2, double delta3);

struct DecompositionReport {
  /// Full grid sum against M + S1 + S2, summand m1^{-s} (m1 + m2)^{-sbar}.
  asymptotics::IdentityResidual residual;
  Index grid_cells = 0;
  Index m_cells = 0;
  Index s1_cells = 0;
  Index s2_cells = 0;
  /// Cells covered zero or more than one time by M, S1, S2.
  Index uncovered_cells = 0;
  Index overlap_cells = 0;
  bool partition_exact = false;

  /// Row limits [t/(t^{1-delta3}-1)] - 1 and [t^{1-delta2}] .. [t] with inner
  /// limits [(t^{1-delta3}-1) m1] + 1 and [m1/(t^{1-delta2}-1)] - 1.
  Index literal_s1_rows = 0;
  Index literal_missing_cells = 0;
  Index literal_extra_cells = 0;
  /// M + literal S1 + literal S2 against the full sum.
  Complex literal_residual;

  /// Simplified limits: rows m <= [t^{delta3}] with n > [t^{1-delta3} m], and
  /// inner limit [m1 / t^{1-delta2}] for S2.
  Index simplified_missing_cells = 0;
  Index simplified_extra_cells = 0;
};

/// Enumerates the full grid once (t <= 3e4, delta2, delta3 in (0, 1/2)).
DecompositionReport m_set_decomposition(double sigma, double t, double delta2, double delta3);

struct SplitSum {
  Complex total;
  Complex sa;
  Complex sb;
};

/// S1 = sum_{m <= [t^delta]} sum_{[t^{1-delta} m] < n <= [t] + m} m^{-s} n^{-sbar},
/// with sa the part n <= [t] and sb the part n > [t].
SplitSum s1_split_sum(double sigma, double t, double delta,
                      Strategy strategy = Strategy::PrefixFactorized);

struct S2SplitSum {
  Complex total;
  Complex sa;
  Complex sb;
  /// l(t) = [t - t^delta] + 1.
  Index l_of_t = 0;
  /// True when no row m < l(t) reaches beyond [t].
  bool l_of_t_verified = false;
  /// delta >= 1/2 lies outside the sharp-estimate window.
  bool delta_warning = false;
};

/// S2 = sum_{[t^{1-delta}] <= m <= [t]} sum_{m < n <= [m (1 + t^{delta-1})]} m^{-s} n^{-sbar},
/// sa over n <= min([t], upper), sb over n > [t] (rows m >= l(t)).
S2SplitSum s2_split_sum(double sigma, double t, double delta,
                        Strategy strategy = Strategy::PrefixFactorized);

}  // namespace zetasum::doublesums
