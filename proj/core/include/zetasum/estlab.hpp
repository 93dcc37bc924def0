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
// Growth-exponent fits over logarithmic t grids, frozen envelope constants,
// the J and J2 integrals, the 5GH partial-summation inequality and dyadic box
// sums.

#pragma once

#include <string>
#include <vector>

#include "zetasum/common.hpp"

namespace zetasum::estlab {

struct SamplePoint {
  double t = 0.0;
  double magnitude = 0.0;
};

struct SampleSeries {
  std::string label;
  std::vector<SamplePoint> points;
  /// Magnitudes are divided by (ln t)^ln_power before fitting.
  int ln_power = 0;
};

struct FitReport {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  Index used_points = 0;
  bool dropped_zeros = false;
  /// max over points of magnitude / (t^alpha (ln t)^k).
  double max_ratio_constant = 0.0;
  double claimed_exponent = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// t_min, ..., t_max with equal spacing in ln t (points >= 2).
std::vector<double> log_grid(double t_min, double t_max, int points);

/// Least squares of ln(magnitude / (ln t)^k) against ln t. Zero magnitudes are
/// dropped (flagged); fewer than 5 usable points throws. Requires t strictly
/// increasing.
FitReport fit_growth_exponent(const SampleSeries& series);

/// max over points of magnitude / (t^alpha (ln t)^ln_power).
FitReport bound_envelope(const SampleSeries& series, double alpha, int ln_power);

/// Fit plus envelope at alpha = claimed_exponent; pass iff
/// slope <= claimed_exponent + tolerance and the envelope constant is finite.
FitReport assess(const SampleSeries& series, double claimed_exponent, double tolerance);

/// J(m1, t) = integral over [m1 + 1, t] of (m1 + x)^{-sigma1} x^{-sigma2} dx,
/// adaptive Gauss-Kronrod to 1e-12 relative. Requires sigma1 + sigma2 < 1 and
/// m1 + 1 < t.
double j_integral(Index m1, double t, double sigma1, double sigma2);

/// 2^{-sigma1} (t^{1-sigma1-sigma2} - (m1+1)^{1-sigma1-sigma2}) / (1 - sigma1 - sigma2),
/// an upper bound for J when sigma1 <= 0.
double j_bound(Index m1, double t, double sigma1, double sigma2);

struct J2Result {
  double numeric = 0.0;
  double asymptotic = 0.0;  // t^{1 - 2 sigma + delta} / (2 (1 - sigma))
  /// max(t^{-2 delta (1 - sigma)}, t^{-delta}).
  double error_scale = 0.0;
};

/// J2 = integral over t^{1-delta} < x < t, 1 < y < x / t^{1-delta} of
/// x^{-sigma} (x + y)^{-sigma}, inner integral in closed form. Requires
/// 0 <= sigma < 1, 0 < delta < 1, t^{1-delta} > 1.
J2Result j2_integral(double sigma, double t, double delta);

/// Row-major rows x cols matrix.
template <typename T>
struct Grid {
  Index rows = 0;
  Index cols = 0;
  std::vector<T> data;

  Grid() = default;
  Grid(Index r, Index c) : rows(r), cols(c), data(static_cast<std::size_t>(r * c)) {}
  T& operator()(Index i, Index j) { return data[static_cast<std::size_t>(i * cols + j)]; }
  const T& operator()(Index i, Index j) const { return data[static_cast<std::size_t>(i * cols + j)]; }
};

struct GhReport {
  double lhs = 0.0;    // |sum a b|
  double g = 0.0;      // max |S_{m,n}| over partial rectangle sums of a
  double h = 0.0;      // max b
  double bound = 0.0;  // 5 G H
  /// b_{m,n} - b_{m+1,n}, b_{m,n} - b_{m,n+1} and the mixed second difference
  /// each keep one sign over the grid.
  bool sign_conditions_ok = false;
  [[nodiscard]] bool holds() const { return lhs <= bound; }
};

/// Throws Error when the shapes differ or some b is negative or non-finite.
GhReport gh_bound_check(const Grid<Complex>& a, const Grid<double>& b);

struct BoxSumReport {
  Complex value;
  double bound = 0.0;  // t ln t
  double ratio = 0.0;  // |value| / bound
  /// M < M' <= 2M and N < N' <= 2N.
  bool dyadic = false;
  /// sqrt(t) < M, N and 2M, 2N < t.
  bool window = false;
  double ell1 = 0.0;  // M^2 / t
  double ell2 = 0.0;  // N^2 / t
  double lambda1 = 0.0;  // t / M^2
  double lambda2 = 0.0;  // t / N^2
};

/// sum_{m=M..M'} sum_{n=N..N'} m^{it} n^{-it}, factorized into two single
/// sums. Requires N > M' so that n > m holds on the whole box.
BoxSumReport box_sum_check(Index m_lo, Index m_hi, Index n_lo, Index n_hi, double t);

}  // namespace zetasum::estlab
