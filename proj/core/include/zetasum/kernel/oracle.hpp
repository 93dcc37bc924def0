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
// Independent extended-precision evaluation of single sums, term by term with
// no prefix tables or factorization. Used to certify the fast paths.

#pragma once

#include "zetasum/common.hpp"
#include "zetasum/kernel/complex_dd.hpp"
#include "zetasum/sum_spec.hpp"

namespace zetasum::kernel {

struct OracleResult {
  ComplexDD value;
  Index terms = 0;
  bool empty_set = false;

  [[nodiscard]] Complex to_complex() const { return value.to_complex(); }
};

/// Extended-precision phase f(m) of the given kind.
DoubleDouble phase_dd(PhaseKind kind, double t, Index m);

/// m^{-sigma} e^{+-i f(m)} in extended precision.
ComplexDD term_dd(const SumSpec& spec, Index m);

/// Throws Error if the spec has more than 1e7 terms.
OracleResult oracle_recompute(const SumSpec& spec);

/// n^{-w} in extended precision for complex w given in binary64.
ComplexDD power_dd(Index n, Complex w);

}  // namespace zetasum::kernel
