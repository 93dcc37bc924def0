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

#pragma once

#include <string_view>

#include "zetasum/common.hpp"

namespace zetasum {

/// Phase functions of the weighted single sums:
///   F1: f(m) = t ln(1 + t/m)
///   F2: f(m) = t ln(1 + m/t)
///   F3: f(m) = t ln m
enum class PhaseKind { F1, F2, F3 };

std::string_view to_string(PhaseKind kind);
/// Throws Error for anything other than "F1", "F2", "F3".
PhaseKind phase_kind_from_string(std::string_view name);

/// Sum over m = lo..hi of m^{-sigma} e^{+i f(m)}, or e^{-i f(m)} when
/// conjugate is set. hi = lo - 1 is the empty sum.
struct SumSpec {
  PhaseKind phase = PhaseKind::F3;
  double sigma = 0.0;
  double t = 0.0;
  Index lo = 1;
  Index hi = 0;
  bool conjugate = false;

  [[nodiscard]] Index terms() const { return hi >= lo ? hi - lo + 1 : 0; }
};

/// Throws Error when the spec is malformed (lo < 1, hi < lo - 1, non-finite t,
/// sigma outside [-2, 2]).
void validate(const SumSpec& spec);

}  // namespace zetasum
