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
// Integer parts of real powers such as [t^delta], [t^{1-delta} m].
//
// Region boundaries are decided on these integers, so they are computed in
// double-double and snapped to an integer when the value is within 1e-14
// relative of one. That absorbs both evaluation error and the rounding of
// exponents such as 1/3 or 0.2 to binary64: 10^6^(1/3) gives 100, not 99.

#pragma once

#include "zetasum/common.hpp"
#include "zetasum/kernel/double_double.hpp"

namespace zetasum::kernel {

/// t^e in double-double for t > 0, snapped to the nearest integer when within
/// 1e-14 relative of it.
DoubleDouble pow_dd(double t, double e);

/// [t^e].
Index floor_pow(double t, double e);

/// [x] for a double-double x, with the same integer snapping as pow_dd.
Index floor_snapped(DoubleDouble x);

/// [x * m] computed exactly in double-double for integer m.
Index floor_times(DoubleDouble x, Index m);

/// Smallest integer >= x * m.
Index ceil_times(DoubleDouble x, Index m);

}  // namespace zetasum::kernel
