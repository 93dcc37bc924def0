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

#include "zetasum/doublesums.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "correlation.hpp"
#include "zetasum/kernel/accumulator.hpp"
#include "zetasum/kernel/exact_floor.hpp"
#include "zetasum/kernel/parallel.hpp"
#include "zetasum/phases.hpp"

namespace zetasum::doublesums {

namespace {

using kernel::Accumulator;
using kernel::DoubleDouble;

constexpr Index kPrefixSideLimit = 10'000'000;

Index floor_t(double t) {
  if (!std::isfinite(t) || !(t >= 1.0)) throw Error("double sums require t >= 1");
  return static_cast<Index>(std::floor(t));
}

void require_budget(Index side, Strategy strategy, const char* op) {
  Index limit = kPrefixSideLimit;
  if (strategy == Strategy::BruteForce) limit = kBruteForceLimit;
  if (strategy == Strategy::Correlation) limit = kCorrelationLimit;
  if (side > limit) {
    throw BudgetError(std::string(op) + ": side " + std::to_string(side) + " exceeds the " +
                      std::string(to_string(strategy)) + " limit " + std::to_string(limit));
  }
}

void require_not_correlation(Strategy strategy, const char* op) {
  if (strategy == Strategy::Correlation) {
    throw Error(std::string(op) + ": Correlation strategy not available");
  }
}

// table[n] = n^{-w} for n = 1..upper, table[0] = 0.
std::vector<Complex> power_table(Complex w, Index upper) {
  std::vector<Complex> table(static_cast<std::size_t>(upper + 1));
  const Index chunks = (upper + kernel::kChunkSize - 1) / kernel::kChunkSize;
  kernel::parallel_for(chunks, [&](Index c) {
    const Index begin = 1 + c * kernel::kChunkSize;
    const Index end = std::min(upper, begin + kernel::kChunkSize - 1);
    for (Index n = begin; n <= end; ++n) table[static_cast<std::size_t>(n)] = phases::power_term(n, w);
  });
  return table;
}

Complex at(const std::vector<Complex>& table, Index n) { return table[static_cast<std::size_t>(n)]; }

// sum over rows r in [lo, hi] of row(r), each row a compensated sum.
template <typename Row>
Complex sum_rows(Index lo, Index hi, Row&& row) {
  return kernel::chunked_sum(lo, hi, std::forward<Row>(row)).result();
}

// weight * sum_{n=a}^{b} table[n], every product formed individually.
Complex brute_row(Complex weight, const std::vector<Complex>& table, Index a, Index b) {
  Accumulator acc;
  for (Index n = a; n <= b; ++n) acc.add(weight * at(table, n));
  return acc.result();
}

}  // namespace

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::BruteForce:
      return "BruteForce";
    case Strategy::PrefixFactorized:
      return "PrefixFactorized";
    case Strategy::Correlation:
      return "Correlation";
  }
  return "PrefixFactorized";
}

DoubleSumResult grid_double_sum(double sigma, double t, Strategy strategy) {
  const Index T = floor_t(t);
  require_budget(T, strategy, "grid_double_sum");
  require_not_correlation(strategy, "grid_double_sum");
  const Complex s(sigma, t);
  DoubleSumResult out;
  out.strategy = strategy;
  out.term_count = T * T;
  if (strategy == Strategy::PrefixFactorized) {
    out.value = phases::power_sum(s, 1, T) * phases::power_sum(std::conj(s), 1, T);
    return out;
  }
  const auto a = power_table(s, T);
  const auto b = power_table(std::conj(s), T);
  out.value = sum_rows(1, T, [&](Index m) { return brute_row(at(a, m), b, 1, T); });
  return out;
}

Complex f_sum(Complex u, Complex v, Index n, Strategy strategy) {
  if (n < 1) throw Error("f_sum requires N >= 1");
  require_budget(n, strategy, "f_sum");
  require_not_correlation(strategy, "f_sum");
  if (strategy == Strategy::PrefixFactorized) {
    const auto table = phases::build_prefix(v, 2 * n);
    return sum_rows(1, n, [&](Index m) {
      return phases::power_term(m, u) * table.range(m + 1, m + n);
    });
  }
  const auto a = power_table(u, n);
  const auto b = power_table(v, 2 * n);
  return sum_rows(1, n, [&](Index m) { return brute_row(at(a, m), b, m + 1, m + n); });
}

Complex g_sum(Complex u, Complex v, Index n, Strategy strategy) {
  if (n < 1) throw Error("g_sum requires N >= 1");
  require_budget(n, strategy, "g_sum");
  require_not_correlation(strategy, "g_sum");
  if (strategy == Strategy::PrefixFactorized) {
    const auto table = phases::build_prefix(v, 2 * n);
    return sum_rows(1, n, [&](Index m) {
      return phases::power_term(m, u) * table.range(n + 1, n + m);
    });
  }
  const auto a = power_table(u, n);
  const auto b = power_table(v, 2 * n);
  return sum_rows(1, n, [&](Index m) { return brute_row(at(a, m), b, n + 1, n + m); });
}

asymptotics::IdentityResidual fg_identity_residual(Complex u, Complex v, Index n) {
  asymptotics::IdentityResidual r;
  r.lhs = f_sum(u, v, n) + f_sum(v, u, n) + phases::power_sum(u + v, 1, n);
  r.rhs = phases::power_sum(u, 1, n) * phases::power_sum(v, 1, n) + g_sum(u, v, n) + g_sum(v, u, n);
  r.residual = r.lhs - r.rhs;
  return r;
}

Complex tail_double_sum(double sigma, double t, Strategy strategy) {
  const Index T = floor_t(t);
  require_budget(T, strategy, "tail_double_sum");
  require_not_correlation(strategy, "tail_double_sum");
  const Complex s(sigma, t);
  if (strategy == Strategy::PrefixFactorized) {
    const auto table = phases::build_prefix(s, 2 * T);
    return sum_rows(1, T, [&](Index m) {
      return phases::power_term(m, std::conj(s)) * table.range(T + 1, T + m);
    });
  }
  const auto a = power_table(std::conj(s), T);
  const auto b = power_table(s, 2 * T);
  return sum_rows(1, T, [&](Index m) { return brute_row(at(a, m), b, T + 1, T + m); });
}

asymptotics::IdentityResidual tail_relation_check(double sigma, double t) {
  const Index T = floor_t(t);
  if (t > 1e5) throw BudgetError("tail_relation_check requires t <= 1e5");
  const Complex s(sigma, t);
  const Complex a = phases::power_sum(s, 1, T);
  const Complex f = f_sum(std::conj(s), s, T);
  const Complex diagonal = phases::power_sum(Complex(2.0 * sigma, 0.0), 1, T);
  const Complex tail = tail_double_sum(sigma, t);

  asymptotics::IdentityResidual r;
  r.lhs = 2.0 * f.real() - std::norm(a);
  r.rhs = -diagonal + 2.0 * tail.real();
  r.residual = r.lhs - r.rhs;
  r.envelope = std::abs(sigma - 0.5) < 1e-12 ? std::log(t)
                                             : std::abs(std::pow(t, 1.0 - 2.0 * sigma) / (1.0 - 2.0 * sigma));
  return r;
}

DoubleSumResult sa_sum(double sigma1, double sigma2, double t, Strategy strategy) {
  if (!(sigma1 < 0.0 && sigma2 > 1.0)) throw Error("sa_sum requires sigma1 < 0 and sigma2 > 1");
  const Index T = floor_t(t);
  require_budget(T, strategy, "sa_sum");
  require_not_correlation(strategy, "sa_sum");
  const Complex w1(sigma1, t);   // (m1 + m2)^{-sigma1 - it}
  const Complex w2(sigma2, -t);  // m2^{-sigma2 + it}

  DoubleSumResult out;
  out.strategy = strategy;
  out.term_count = T * T;
  if (strategy == Strategy::PrefixFactorized) {
    const auto table = phases::build_prefix(w1, 2 * T);
    out.value = sum_rows(1, T, [&](Index m) {
      return phases::power_term(m, w2) * table.range(m + 1, m + T);
    });
    return out;
  }
  const auto a = power_table(w2, T);
  const auto b = power_table(w1, 2 * T);
  out.value = sum_rows(1, T, [&](Index m) { return brute_row(at(a, m), b, m + 1, m + T); });
  return out;
}

MordellTornheimResult mordell_tornheim_sum(double sigma1, double sigma2, double sigma3, double t,
                                           Strategy strategy) {
  if (!(sigma1 < 0.0 && sigma2 > 0.0 && sigma2 < 1.0 && sigma3 >= 1.0)) {
    throw Error("mordell_tornheim_sum requires sigma1 < 0, 0 < sigma2 < 1, sigma3 >= 1");
  }
  if (strategy == Strategy::PrefixFactorized) {
    throw Error("mordell_tornheim_sum: the summand does not factor; use Correlation or BruteForce");
  }
  const Index T = floor_t(t);
  require_budget(T, strategy, "mordell_tornheim_sum");

  const auto left = power_table(Complex(sigma1, t), 2 * T);  // (m1 + m2)^{-sigma1 - it}
  const auto right = power_table(Complex(sigma2, -t), T);    // m2^{-sigma2 + it}
  const auto weight = power_table(Complex(sigma3, 0.0), T);  // m1^{-sigma3}

  MordellTornheimResult out;
  out.total.strategy = strategy;
  out.total.term_count = T * T;
  if (strategy == Strategy::Correlation) {
    const auto corr = detail::cross_correlate(left, right, T + 1);
    out.total.value = sum_rows(1, T, [&](Index m1) { return at(weight, m1) * at(corr, m1); });
    return out;
  }

  auto term = [&](Index m1, Index m2) { return at(left, m1 + m2) * at(right, m2) * at(weight, m1); };
  out.part1 = sum_rows(1, T, [&](Index m1) {
    Accumulator acc;
    for (Index m2 = 1; m2 <= m1; ++m2) acc.add(term(m1, m2));
    return acc.result();
  });
  out.part2 = sum_rows(1, T, [&](Index m1) {
    Accumulator acc;
    for (Index m2 = m1 + 1; m2 <= T; ++m2) acc.add(term(m1, m2));
    return acc.result();
  });
  out.part1_exchanged = sum_rows(1, T, [&](Index m2) {
    Accumulator acc;
    for (Index m1 = m2; m1 <= T; ++m1) acc.add(term(m1, m2));
    return acc.result();
  });
  out.parts_computed = true;
  out.total.value = out.part1 + out.part2;
  return out;
}

MSet::MSet(double t, double delta2, double delta3) : t_(t), size_(floor_t(t)) {
  if (!(delta2 > 0.0 && delta2 < 1.0 && delta3 > 0.0 && delta3 < 1.0)) {
    throw Error("M set requires delta2, delta3 in (0, 1)");
  }
  a_ = kernel::pow_dd(t, 1.0 - delta2) - DoubleDouble(1.0);
  b_ = kernel::pow_dd(t, 1.0 - delta3) - DoubleDouble(1.0);
  if (!(a_.hi > 0.0 && b_.hi > 0.0)) throw Error("M set requires t^{1-delta} > 1");
}

bool MSet::contains(Index m1, Index m2) const {
  if (m1 < 1 || m2 < 1 || m1 > size_ || m2 > size_) return false;
  const DoubleDouble x1 = DoubleDouble::from_int(m1);
  const DoubleDouble x2 = DoubleDouble::from_int(m2);
  return a_ * x2 > x1 && x2 < b_ * x1;
}

Index MSet::lower_cut(Index m1) const {
  const DoubleDouble x1 = DoubleDouble::from_int(m1);
  Index c = std::max<Index>(0, static_cast<Index>(std::floor((x1 / a_).to_double())));
  while (a_ * DoubleDouble::from_int(c + 1) <= x1) ++c;
  while (c > 0 && a_ * DoubleDouble::from_int(c) > x1) --c;
  return c;
}

Index MSet::upper_start(Index m1) const {
  const DoubleDouble bound = b_ * DoubleDouble::from_int(m1);
  Index c = std::max<Index>(1, static_cast<Index>(std::ceil(bound.to_double())));
  while (c > 1 && DoubleDouble::from_int(c - 1) >= bound) --c;
  while (DoubleDouble::from_int(c) < bound) ++c;
  return c;
}

bool m_set_contains(Index m1, Index m2, double t, double delta2, double delta3) {
  if (m1 < 1 || m2 < 1) throw Error("m_set_contains requires m1, m2 >= 1");
  return MSet(t, delta2, delta3).contains(m1, m2);
}

DecompositionReport m_set_decomposition(double sigma, double t, double delta2, double delta3) {
  if (!(delta2 > 0.0 && delta2 < 0.5 && delta3 > 0.0 && delta3 < 0.5)) {
    throw Error("decomposition requires delta2, delta3 in (0, 1/2)");
  }
  const MSet m_set(t, delta2, delta3);
  const Index T = m_set.size();
  require_budget(T, Strategy::BruteForce, "m_set_decomposition");
  const Complex s(sigma, t);

  const DoubleDouble a = kernel::pow_dd(t, 1.0 - delta2) - DoubleDouble(1.0);
  const DoubleDouble b = kernel::pow_dd(t, 1.0 - delta3) - DoubleDouble(1.0);
  const DoubleDouble p2 = kernel::pow_dd(t, 1.0 - delta2);
  const DoubleDouble p3 = kernel::pow_dd(t, 1.0 - delta3);
  const Index literal_s1_rows = kernel::floor_snapped(DoubleDouble(t) / b) - 1;
  const Index literal_s2_first = kernel::floor_pow(t, 1.0 - delta2);
  const Index simplified_s1_rows = kernel::floor_pow(t, delta3);

  const auto weight = power_table(s, T);               // m1^{-s}
  const auto inner = power_table(std::conj(s), 2 * T);  // (m1 + m2)^{-sbar}

  struct Row {
    Accumulator m, s1, s2, lit1, lit2;
    Index m_cells = 0, s1_cells = 0, s2_cells = 0;
    Index uncovered = 0, overlap = 0;
    Index lit_missing = 0, lit_extra = 0, simp_missing = 0, simp_extra = 0;
  };
  std::vector<Row> rows(static_cast<std::size_t>(T));

  kernel::parallel_for(T, [&](Index r) {
    const Index m1 = r + 1;
    Row& row = rows[static_cast<std::size_t>(r)];
    const Index upper = m_set.upper_start(m1);
    const Index s2_end = std::min(m_set.lower_cut(m1), upper - 1);

    const bool lit1_row = m1 <= literal_s1_rows;
    const Index lit1_start = kernel::floor_times(b, m1) + 1;
    const bool lit2_row = m1 >= literal_s2_first;
    const Index lit2_end = kernel::floor_snapped(DoubleDouble::from_int(m1) / a) - 1;
    const bool simp1_row = m1 <= simplified_s1_rows;
    const Index simp1_start = kernel::floor_times(p3, m1) + 1 - m1;
    const Index simp2_end = kernel::floor_snapped(DoubleDouble::from_int(m1) / p2);

    for (Index m2 = 1; m2 <= T; ++m2) {
      const Complex term = at(weight, m1) * at(inner, m1 + m2);
      const bool in_m = m_set.contains(m1, m2);
      const bool in_s1 = m2 >= upper;
      const bool in_s2 = m2 <= s2_end;
      if (in_m) {
        row.m.add(term);
        ++row.m_cells;
      }
      if (in_s1) {
        row.s1.add(term);
        ++row.s1_cells;
      }
      if (in_s2) {
        row.s2.add(term);
        ++row.s2_cells;
      }
      const int cover = int{in_m} + int{in_s1} + int{in_s2};
      if (cover == 0) ++row.uncovered;
      if (cover > 1) row.overlap += cover - 1;

      const bool in_lit1 = lit1_row && m2 >= lit1_start;
      const bool in_lit2 = lit2_row && m2 <= lit2_end;
      if (in_lit1) row.lit1.add(term);
      if (in_lit2) row.lit2.add(term);
      const int lit_cover = int{in_m} + int{in_lit1} + int{in_lit2};
      if (lit_cover == 0) ++row.lit_missing;
      if (lit_cover > 1) row.lit_extra += lit_cover - 1;

      const bool in_simp1 = simp1_row && m2 >= simp1_start;
      const bool in_simp2 = lit2_row && m2 <= simp2_end;
      const int simp_cover = int{in_m} + int{in_simp1} + int{in_simp2};
      if (simp_cover == 0) ++row.simp_missing;
      if (simp_cover > 1) row.simp_extra += simp_cover - 1;
    }
  });

  DecompositionReport rep;
  rep.grid_cells = T * T;
  rep.literal_s1_rows = std::max<Index>(0, literal_s1_rows);
  std::vector<Accumulator> m_parts, s1_parts, s2_parts, lit1_parts, lit2_parts;
  for (const Row& row : rows) {
    m_parts.push_back(row.m);
    s1_parts.push_back(row.s1);
    s2_parts.push_back(row.s2);
    lit1_parts.push_back(row.lit1);
    lit2_parts.push_back(row.lit2);
    rep.m_cells += row.m_cells;
    rep.s1_cells += row.s1_cells;
    rep.s2_cells += row.s2_cells;
    rep.uncovered_cells += row.uncovered;
    rep.overlap_cells += row.overlap;
    rep.literal_missing_cells += row.lit_missing;
    rep.literal_extra_cells += row.lit_extra;
    rep.simplified_missing_cells += row.simp_missing;
    rep.simplified_extra_cells += row.simp_extra;
  }
  rep.partition_exact = rep.uncovered_cells == 0 && rep.overlap_cells == 0 &&
                        rep.m_cells + rep.s1_cells + rep.s2_cells == rep.grid_cells;

  const Complex m_sum = kernel::reduce_deterministic(std::span<const Accumulator>(m_parts)).result();
  const Complex s1_sum = kernel::reduce_deterministic(std::span<const Accumulator>(s1_parts)).result();
  const Complex s2_sum = kernel::reduce_deterministic(std::span<const Accumulator>(s2_parts)).result();
  const Complex lit1_sum = kernel::reduce_deterministic(std::span<const Accumulator>(lit1_parts)).result();
  const Complex lit2_sum = kernel::reduce_deterministic(std::span<const Accumulator>(lit2_parts)).result();

  // Full sum by an independent route: prefix differences over n = m1 + m2.
  const auto table = phases::build_prefix(sigma, t, true, 2 * T);
  const Complex full = sum_rows(1, T, [&](Index m1) {
    return phases::power_term(m1, s) * table.range(m1 + 1, m1 + T);
  });

  rep.residual.lhs = full;
  rep.residual.rhs = m_sum + s1_sum + s2_sum;
  rep.residual.residual = rep.residual.lhs - rep.residual.rhs;
  rep.literal_residual = full - (m_sum + lit1_sum + lit2_sum);
  return rep;
}

SplitSum s1_split_sum(double sigma, double t, double delta, Strategy strategy) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error("s1_split_sum requires 0 < delta < 1");
  const Index T = floor_t(t);
  require_budget(T, strategy, "s1_split_sum");
  require_not_correlation(strategy, "s1_split_sum");
  const Index rows = kernel::floor_pow(t, delta);
  const DoubleDouble p = kernel::pow_dd(t, 1.0 - delta);
  const Complex s(sigma, t);

  std::vector<Complex> sa(static_cast<std::size_t>(rows));
  std::vector<Complex> sb(static_cast<std::size_t>(rows));
  auto fill = [&](auto&& range) {
    kernel::parallel_for(rows, [&](Index r) {
      const Index m = r + 1;
      const Complex w = phases::power_term(m, s);
      const Index start = kernel::floor_times(p, m) + 1;
      sa[static_cast<std::size_t>(r)] = range(w, start, T);
      sb[static_cast<std::size_t>(r)] = range(w, std::max(start, T + 1), T + m);
    });
  };
  if (strategy == Strategy::PrefixFactorized) {
    const auto table = phases::build_prefix(sigma, t, true, T + rows);
    fill([&](Complex w, Index a, Index b) { return w * table.range(a, b); });
  } else {
    const auto inner = power_table(std::conj(s), T + rows);
    fill([&](Complex w, Index a, Index b) { return brute_row(w, inner, a, b); });
  }

  SplitSum out;
  out.sa = kernel::reduce_deterministic(std::span<const Complex>(sa));
  out.sb = kernel::reduce_deterministic(std::span<const Complex>(sb));
  out.total = out.sa + out.sb;
  return out;
}

S2SplitSum s2_split_sum(double sigma, double t, double delta, Strategy strategy) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error("s2_split_sum requires 0 < delta < 1");
  const Index T = floor_t(t);
  require_budget(T, strategy, "s2_split_sum");
  require_not_correlation(strategy, "s2_split_sum");
  const Index first = std::max<Index>(1, kernel::floor_pow(t, 1.0 - delta));
  const DoubleDouble factor = DoubleDouble(1.0) + kernel::pow_dd(t, delta - 1.0);
  const Complex s(sigma, t);

  S2SplitSum out;
  out.delta_warning = delta >= 0.5;
  out.l_of_t = kernel::floor_snapped(DoubleDouble(t) - kernel::pow_dd(t, delta)) + 1;

  const Index count = std::max<Index>(0, T - first + 1);
  std::vector<Index> upper(static_cast<std::size_t>(count));
  Index max_upper = T;
  bool verified = true;
  for (Index r = 0; r < count; ++r) {
    const Index m = first + r;
    upper[static_cast<std::size_t>(r)] = kernel::floor_times(factor, m);
    max_upper = std::max(max_upper, upper[static_cast<std::size_t>(r)]);
    if (m < out.l_of_t && upper[static_cast<std::size_t>(r)] > T) verified = false;
  }
  out.l_of_t_verified = verified;

  std::vector<Complex> sa(static_cast<std::size_t>(count));
  std::vector<Complex> sb(static_cast<std::size_t>(count));
  auto fill = [&](auto&& range) {
    kernel::parallel_for(count, [&](Index r) {
      const Index m = first + r;
      const Index u = upper[static_cast<std::size_t>(r)];
      const Complex w = phases::power_term(m, s);
      sa[static_cast<std::size_t>(r)] = range(w, m + 1, std::min(T, u));
      sb[static_cast<std::size_t>(r)] = range(w, std::max(T + 1, m + 1), u);
    });
  };
  if (strategy == Strategy::PrefixFactorized) {
    const auto table = phases::build_prefix(sigma, t, true, max_upper);
    fill([&](Complex w, Index a, Index b) { return w * table.range(a, b); });
  } else {
    const auto inner = power_table(std::conj(s), max_upper);
    fill([&](Complex w, Index a, Index b) { return brute_row(w, inner, a, b); });
  }

  out.sa = kernel::reduce_deterministic(std::span<const Complex>(sa));
  out.sb = kernel::reduce_deterministic(std::span<const Complex>(sb));
  out.total = out.sa + out.sb;
  return out;
}

}  // namespace zetasum::doublesums
