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

#include "zetasum/common.hpp"
#include "zetasum/kernel/complex_dd.hpp"

namespace zetasum::kernel {

/// Principal branch of log Gamma(z): Stirling series after an upward shift,
/// reflection for Re z < 1/2. Throws Error("gamma pole") at z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Extended-precision log Gamma for Re z >= 1/2 (about 31 digits).
ComplexDD log_gamma_dd(ComplexDD z);

}  // namespace zetasum::kernel
