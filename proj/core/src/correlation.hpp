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

#include <vector>

#include "zetasum/common.hpp"

namespace zetasum::detail {

/// c[j] = sum_k left[k + j] * right[k] for j = 0..count-1, with out-of-range
/// entries of left treated as zero. Computed by zero-padded FFTs.
std::vector<Complex> cross_correlate(const std::vector<Complex>& left,
                                     const std::vector<Complex>& right, Index count);

}  // namespace zetasum::detail
