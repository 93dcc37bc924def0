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

#include "zetasum/kernel/oracle.hpp"

#include <string>

namespace zetasum::kernel {

namespace {

constexpr Index kOracleTermLimit = 10'000'000;

}  // namespace

DoubleDouble phase_dd(PhaseKind kind, double t, Index m) {
  const DoubleDouble tt(t);
  const DoubleDouble mm = DoubleDouble::from_int(m);
  switch (kind) {
    case PhaseKind::F1:
      return tt * (log(mm + tt) - log(mm));
    case PhaseKind::F2:
      return tt * (log(mm + tt) - log(tt));
    case PhaseKind::F3:
      break;
  }
  return tt * log(mm);
}

ComplexDD term_dd(const SumSpec& spec, Index m) {
  DoubleDouble phase = phase_dd(spec.phase, spec.t, m);
  if (spec.conjugate) phase = -phase;
  const DoubleDouble weight =
      spec.sigma == 0.0 ? DoubleDouble(1.0)
                        : exp(-(DoubleDouble(spec.sigma) * log(DoubleDouble::from_int(m))));
  return expi(phase) * weight;
}

OracleResult oracle_recompute(const SumSpec& spec) {
  validate(spec);
  OracleResult out;
  out.terms = spec.terms();
  if (out.terms == 0) {
    out.empty_set = true;
    return out;
  }
  if (out.terms > kOracleTermLimit) {
    throw BudgetError("oracle limited to 1e7 terms, spec has " + std::to_string(out.terms));
  }
  for (Index m = spec.lo; m <= spec.hi; ++m) out.value += term_dd(spec, m);
  return out;
}

ComplexDD power_dd(Index n, Complex w) { return pow_neg(n, ComplexDD(w)); }

}  // namespace zetasum::kernel
