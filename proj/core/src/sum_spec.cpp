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

#include "zetasum/sum_spec.hpp"

#include <cmath>
#include <string>

namespace zetasum {

std::string_view to_string(PhaseKind kind) {
  switch (kind) {
    case PhaseKind::F1:
      return "F1";
    case PhaseKind::F2:
      return "F2";
    case PhaseKind::F3:
      return "F3";
  }
  return "F3";
}

PhaseKind phase_kind_from_string(std::string_view name) {
  if (name == "F1") return PhaseKind::F1;
  if (name == "F2") return PhaseKind::F2;
  if (name == "F3") return PhaseKind::F3;
  throw Error("unknown phase kind '" + std::string(name) + "' (expected F1, F2 or F3)");
}

void validate(const SumSpec& spec) {
  if (!std::isfinite(spec.t) || !std::isfinite(spec.sigma)) throw Error("non-finite input");
  if (std::abs(spec.sigma) > 2.0) throw Error("exponent window");
  if (spec.lo < 1) throw Error("sum range must start at m >= 1");
  if (spec.hi < spec.lo - 1) throw Error("sum range needs hi >= lo - 1");
  if (spec.t < 0.0 || (spec.t == 0.0 && spec.phase != PhaseKind::F3)) {
    throw Error("phase requires t > 0");
  }
}

}  // namespace zetasum
