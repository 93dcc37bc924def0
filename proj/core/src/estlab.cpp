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

#include "zetasum/estlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zetasum/kernel/accumulator.hpp"
#include "zetasum/phases.hpp"

namespace zetasum::estlab {

namespace {

double log_power(double t, int k) {
  if (k == 0) return 1.0;
  return std::pow(std::log(t), k);
}

void check_series(const SampleSeries& series) {
  if (series.ln_power < 0) throw Error("ln_power must be >= 0");
  for (std::size_t i = 0; i < series.points.size(); ++i) {
    const auto& p = series.points[i];
    if (!std::isfinite(p.t) || !std::isfinite(p.magnitude) || p.magnitude < 0.0) {
      throw Error("series '" + series.label + "' has a non-finite or negative sample");
    }
    if (series.ln_power > 0 && !(p.t > 1.0)) throw Error("ln division requires t > 1");
    if (i > 0 && !(p.t > series.points[i - 1].t)) {
      throw Error("series '" + series.label + "' is not strictly increasing in t");
    }
  }
}

}  // namespace

std::vector<double> log_grid(double t_min, double t_max, int points) {
  if (points < 2) throw Error("log grid needs at least 2 points");
  if (!(t_min > 0.0 && t_max > t_min)) throw Error("log grid needs 0 < t_min < t_max");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double lo = std::log(t_min);
  const double step = (std::log(t_max) - lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = std::exp(lo + step * i);
  grid.front() = t_min;
  grid.back() = t_max;
  return grid;
}

FitReport fit_growth_exponent(const SampleSeries& series) {
  check_series(series);
  std::vector<double> xs;
  std::vector<double> ys;
  FitReport rep;
  for (const auto& p : series.points) {
    if (p.magnitude == 0.0) {
      rep.dropped_zeros = true;
      continue;
    }
    xs.push_back(std::log(p.t));
    ys.push_back(std::log(p.magnitude) - series.ln_power * std::log(std::log(p.t)));
  }
  if (xs.size() < 5) throw Error("fit needs at least 5 points with nonzero magnitude");

  const auto n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  rep.slope = sxy / sxx;
  rep.intercept = my - rep.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double r = ys[i] - (rep.intercept + rep.slope * xs[i]);
    ss += r * r;
  }
  rep.residual_rms = std::sqrt(ss / n);
  rep.used_points = static_cast<Index>(xs.size());
  return rep;
}

FitReport bound_envelope(const SampleSeries& series, double alpha, int ln_power) {
  check_series(series);
  if (series.points.size() < 5) throw Error("envelope needs at least 5 points");
  if (ln_power < 0) throw Error("ln_power must be >= 0");
  FitReport rep;
  rep.claimed_exponent = alpha;
  double worst = 0.0;
  for (const auto& p : series.points) {
    if (ln_power > 0 && !(p.t > 1.0)) throw Error("ln division requires t > 1");
    worst = std::max(worst, p.magnitude / (std::pow(p.t, alpha) * log_power(p.t, ln_power)));
  }
  rep.max_ratio_constant = worst;
  rep.used_points = static_cast<Index>(series.points.size());
  return rep;
}

FitReport assess(const SampleSeries& series, double claimed_exponent, double tolerance) {
  FitReport rep = fit_growth_exponent(series);
  rep.max_ratio_constant =
      bound_envelope(series, claimed_exponent, series.ln_power).max_ratio_constant;
  rep.claimed_exponent = claimed_exponent;
  rep.tolerance = tolerance;
  rep.pass = rep.slope <= claimed_exponent + tolerance && std::isfinite(rep.max_ratio_constant);
  return rep;
}

GhReport gh_bound_check(const Grid<Complex>& a, const Grid<double>& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw Error("gh_bound_check: a and b differ in shape");
  if (a.rows < 1 || a.cols < 1) throw Error("gh_bound_check: empty grid");
  GhReport rep;
  for (double v : b.data) {
    if (!std::isfinite(v) || v < 0.0) throw Error("gh_bound_check: b must lie in [0, H]");
    rep.h = std::max(rep.h, v);
  }

  kernel::Accumulator total;
  // Row-by-row 2-D prefix sums S_{m,n}.
  std::vector<Complex> column_sums(static_cast<std::size_t>(a.cols));
  for (Index m = 0; m < a.rows; ++m) {
    Complex running{};
    for (Index n = 0; n < a.cols; ++n) {
      total.add(a(m, n) * b(m, n));
      running += a(m, n);
      column_sums[static_cast<std::size_t>(n)] += running;
      rep.g = std::max(rep.g, std::abs(column_sums[static_cast<std::size_t>(n)]));
    }
  }
  rep.lhs = std::abs(total.result());
  rep.bound = 5.0 * rep.g * rep.h;

  auto one_sign = [](const std::vector<double>& values) {
    const bool nonneg = std::all_of(values.begin(), values.end(), [](double v) { return v >= 0.0; });
    const bool nonpos = std::all_of(values.begin(), values.end(), [](double v) { return v <= 0.0; });
    return nonneg || nonpos;
  };
  std::vector<double> dm;
  std::vector<double> dn;
  std::vector<double> dmn;
  for (Index m = 0; m < a.rows; ++m) {
    for (Index n = 0; n < a.cols; ++n) {
      if (m + 1 < a.rows) dm.push_back(b(m, n) - b(m + 1, n));
      if (n + 1 < a.cols) dn.push_back(b(m, n) - b(m, n + 1));
      if (m + 1 < a.rows && n + 1 < a.cols) {
        dmn.push_back(b(m, n) - b(m + 1, n) - b(m, n + 1) + b(m + 1, n + 1));
      }
    }
  }
  rep.sign_conditions_ok = one_sign(dm) && one_sign(dn) && one_sign(dmn);
  return rep;
}

BoxSumReport box_sum_check(Index m_lo, Index m_hi, Index n_lo, Index n_hi, double t) {
  if (m_lo < 1 || m_hi < m_lo || n_hi < n_lo) throw Error("box_sum_check: malformed box");
  if (n_lo <= m_hi) {
    throw Error("box must satisfy n>m identically; triangle-overlapping boxes unsupported");
  }
  if (!(t > 1.0)) throw Error("box_sum_check requires t > 1");

  BoxSumReport rep;
  const Complex ms = phases::single_sum({PhaseKind::F3, 0.0, t, m_lo, m_hi, false});
  const Complex ns = phases::single_sum({PhaseKind::F3, 0.0, t, n_lo, n_hi, true});
  rep.value = ms * ns;
  rep.bound = t * std::log(t);
  rep.ratio = std::abs(rep.value) / rep.bound;

  const auto m = static_cast<double>(m_lo);
  const auto n = static_cast<double>(n_lo);
  rep.dyadic = m_lo < m_hi && m_hi <= 2 * m_lo && n_lo < n_hi && n_hi <= 2 * n_lo;
  rep.window = std::sqrt(t) < m && std::sqrt(t) < n && 2.0 * m < t && 2.0 * n < t;
  rep.ell1 = m * m / t;
  rep.ell2 = n * n / t;
  rep.lambda1 = t / (m * m);
  rep.lambda2 = t / (n * n);
  return rep;
}

}  // namespace zetasum::estlab
