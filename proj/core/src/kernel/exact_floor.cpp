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

#include "zetasum/kernel/exact_floor.hpp"

#include <algorithm>
#include <cmath>

namespace zetasum::kernel {

namespace {

constexpr double kSnapTolerance = 1e-14;

DoubleDouble snap(DoubleDouble x) {
  const DoubleDouble nearest = round(x);
  const double scale = std::max(1.0, std::abs(x.hi));
  if (std::abs((x - nearest).to_double()) <= kSnapTolerance * scale) return nearest;
  return x;
}

Index to_index(DoubleDouble integral) {
  return static_cast<Index>(integral.hi) + static_cast<Index>(integral.lo);
}

}  // namespace

DoubleDouble pow_dd(double t, double e) {
  if (!(t > 0.0) || !std::isfinite(t) || !std::isfinite(e)) throw Error("non-finite input");
  return snap(exp(DoubleDouble(e) * log(DoubleDouble(t))));
}

Index floor_pow(double t, double e) { return to_index(floor(pow_dd(t, e))); }

Index floor_snapped(DoubleDouble x) { return to_index(floor(snap(x))); }

Index floor_times(DoubleDouble x, Index m) {
  return floor_snapped(x * DoubleDouble::from_int(m));
}

Index ceil_times(DoubleDouble x, Index m) {
  const DoubleDouble product = snap(x * DoubleDouble::from_int(m));
  const DoubleDouble down = floor(product);
  const Index f = to_index(down);
  return down == product ? f : f + 1;
}

}  // namespace zetasum::kernel
