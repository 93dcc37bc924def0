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
// Phase functions, weighted single exponential sums and prefix-sum tables.

#pragma once

#include <vector>

#include "zetasum/common.hpp"
#include "zetasum/sum_spec.hpp"

namespace zetasum::phases {

/// Largest PrefixTable accepted by build_prefix (entries, about 320 MB).
inline constexpr Index kPrefixLimit = 20'000'000;

/// f(m) for the given phase kind. Throws Error for t <= 0 or m < 1.
double phase_eval(PhaseKind kind, double t, Index m);

/// e^{i phase} with the phase reduced modulo 2 pi in long double first.
Complex unit_phase(long double phase);

/// One summand m^{-sigma} e^{+-i f(m)} (minus sign when conjugate is set).
Complex sum_term(PhaseKind kind, double sigma, double t, Index m, bool conjugate);

/// n^{-w} for complex w.
Complex power_term(Index n, Complex w);

/// Sum described by spec, via chunked compensated summation. Extended
/// precision routes to the double-double oracle.
Complex single_sum(const SumSpec& spec, Precision precision = Precision::standard);

/// Sum of n^{-w} over lo <= n <= hi (0 when hi < lo). |Re w| must be <= 8.
Complex power_sum(Complex w, Index lo, Index hi);

/// Sum over m <= [t^delta] of m^{-sigma} e^{i t ln(1 + t/m)}; 0 when [t^delta] = 0.
Complex d_delta_sum(double sigma, double t, double delta,
                    Precision precision = Precision::standard);

/// Cumulative sums c[k] = sum_{n=1}^{k} n^{-w}, k = 0..upper.
class PrefixTable {
 public:
  PrefixTable() = default;
  PrefixTable(Complex exponent, std::vector<Complex> cumulative);

  /// c[k]; k must be in [0, upper].
  [[nodiscard]] Complex at(Index k) const { return cumulative_[static_cast<std::size_t>(k)]; }
  /// Sum over a <= n <= b; 0 when b < a.
  [[nodiscard]] Complex range(Index a, Index b) const;
  [[nodiscard]] Index upper() const { return static_cast<Index>(cumulative_.size()) - 1; }
  [[nodiscard]] Complex exponent() const { return exponent_; }
  [[nodiscard]] const std::vector<Complex>& cumulative() const { return cumulative_; }

 private:
  Complex exponent_{};
  std::vector<Complex> cumulative_{Complex{}};
};

/// Table of n^{-sigma-it}, or n^{-sigma+it} when conjugate is set.
/// Throws BudgetError beyond kPrefixLimit.
PrefixTable build_prefix(double sigma, double t, bool conjugate, Index upper);

/// Table of n^{-w} for an arbitrary complex exponent.
PrefixTable build_prefix(Complex w, Index upper);

/// The derivative ratio
///   C(x,t;k) = (1 + sum_{n=1}^{k-1} binom(k,n) r^n) / (1 + sum_{n=1}^{k} binom(k,n) r^n),
/// r = x/t, which lies in (1 - 2^{-k}, 1) for 0 < x < t.
double c_ratio(double x, double t, int k);

}  // namespace zetasum::phases
