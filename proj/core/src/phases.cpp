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

#include "zetasum/phases.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetasum/kernel/accumulator.hpp"
#include "zetasum/kernel/exact_floor.hpp"
#include "zetasum/kernel/oracle.hpp"
#include "zetasum/kernel/parallel.hpp"

namespace zetasum::phases {

namespace {

constexpr long double kTwoPiHi = 6.283185307179586476925286766559005768L;
// 2 pi - kTwoPiHi, the part of 2 pi below long double resolution.
constexpr long double kTwoPiLo = -1.0033115225336664047e-19L;

long double phase_ld(PhaseKind kind, double t, Index m) {
  const long double tt = t;
  const long double mm = static_cast<long double>(m);
  switch (kind) {
    case PhaseKind::F1:
      return tt * std::log1p(tt / mm);
    case PhaseKind::F2:
      return tt * std::log1p(mm / tt);
    case PhaseKind::F3:
      break;
  }
  return tt * std::log(mm);
}

void check_exponent(Complex w) {
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) throw Error("non-finite input");
  if (std::abs(w.real()) > 8.0) throw Error("exponent window");
}

}  // namespace

double phase_eval(PhaseKind kind, double t, Index m) {
  if (!(t > 0.0) || !std::isfinite(t)) throw Error("phase requires t > 0");
  if (m < 1) throw Error("phase requires m >= 1");
  return static_cast<double>(phase_ld(kind, t, m));
}

Complex unit_phase(long double phase) {
  const long double k = std::nearbyint(phase / kTwoPiHi);
  const auto r = static_cast<double>((phase - k * kTwoPiHi) - k * kTwoPiLo);
  return {std::cos(r), std::sin(r)};
}

Complex sum_term(PhaseKind kind, double sigma, double t, Index m, bool conjugate) {
  long double phase = t == 0.0 ? 0.0L : phase_ld(kind, t, m);
  if (conjugate) phase = -phase;
  const double weight = sigma == 0.0 ? 1.0 : std::pow(static_cast<double>(m), -sigma);
  return weight * unit_phase(phase);
}

Complex power_term(Index n, Complex w) {
  const long double ln = std::log(static_cast<long double>(n));
  const double weight = w.real() == 0.0 ? 1.0 : std::exp(-w.real() * static_cast<double>(ln));
  return weight * unit_phase(-static_cast<long double>(w.imag()) * ln);
}

Complex single_sum(const SumSpec& spec, Precision precision) {
  validate(spec);
  if (precision == Precision::extended) return kernel::oracle_recompute(spec).to_complex();
  const Complex value =
      kernel::chunked_sum(spec.lo, spec.hi, [&](Index m) {
        return sum_term(spec.phase, spec.sigma, spec.t, m, spec.conjugate);
      }).result();
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw Error("non-finite input");
  }
  return value;
}

Complex power_sum(Complex w, Index lo, Index hi) {
  check_exponent(w);
  if (lo < 1) throw Error("sum range must start at n >= 1");
  return kernel::chunked_sum(lo, hi, [&](Index n) { return power_term(n, w); }).result();
}

Complex d_delta_sum(double sigma, double t, double delta, Precision precision) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error("delta must lie in (0, 1)");
  if (!(t > 1.0)) throw Error("d_delta_sum requires t > 1");
  const Index upper = kernel::floor_pow(t, delta);
  if (upper < 1) return {};
  return single_sum({PhaseKind::F1, sigma, t, 1, upper, false}, precision);
}

PrefixTable::PrefixTable(Complex exponent, std::vector<Complex> cumulative)
    : exponent_(exponent), cumulative_(std::move(cumulative)) {
  if (cumulative_.empty()) cumulative_.push_back({});
}

Complex PrefixTable::range(Index a, Index b) const {
  if (b < a) return {};
  if (a < 1 || b > upper()) {
    throw Error("prefix range [" + std::to_string(a) + ", " + std::to_string(b) +
                "] outside table of size " + std::to_string(upper()));
  }
  return at(b) - at(a - 1);
}

PrefixTable build_prefix(Complex w, Index upper) {
  check_exponent(w);
  if (upper < 0) throw Error("prefix table size must be >= 0");
  if (upper > kPrefixLimit) {
    const double mb = static_cast<double>(upper + 1) * sizeof(Complex) / 1e6;
    throw BudgetError("prefix table of " + std::to_string(upper) + " entries needs " +
                      std::to_string(static_cast<long long>(mb)) + " MB; limit is " +
                      std::to_string(kPrefixLimit) + " entries");
  }

  // Terms are independent and evaluated in parallel; the running sum is a
  // single ordered pass.
  std::vector<Complex> c(static_cast<std::size_t>(upper + 1));
  const Index chunks = (upper + kernel::kChunkSize - 1) / kernel::kChunkSize;
  kernel::parallel_for(chunks, [&](Index k) {
    const Index begin = 1 + k * kernel::kChunkSize;
    const Index end = std::min(upper, begin + kernel::kChunkSize - 1);
    for (Index n = begin; n <= end; ++n) c[static_cast<std::size_t>(n)] = power_term(n, w);
  });

  kernel::Accumulator acc;
  c[0] = {};
  for (Index n = 1; n <= upper; ++n) {
    acc.add(c[static_cast<std::size_t>(n)]);
    c[static_cast<std::size_t>(n)] = acc.result();
  }
  return {w, std::move(c)};
}

PrefixTable build_prefix(double sigma, double t, bool conjugate, Index upper) {
  return build_prefix(Complex(sigma, conjugate ? -t : t), upper);
}

double c_ratio(double x, double t, int k) {
  if (!std::isfinite(x) || !std::isfinite(t)) throw Error("non-finite input");
  if (k < 2) throw Error("c_ratio requires k >= 2");
  if (!(x > 0.0)) throw Error("c_ratio requires x > 0");
  if (x >= t) throw Error("c_ratio requires x < t");

  const double r = x / t;
  double binom = 1.0;
  double power = 1.0;
  double numerator = 1.0;
  for (int n = 1; n < k; ++n) {
    binom = binom * (k - n + 1) / n;
    power *= r;
    numerator += binom * power;
  }
  const double denominator = numerator + power * r;
  return numerator / denominator;
}

}  // namespace zetasum::phases
