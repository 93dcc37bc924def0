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

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace zetasum {

/// Standard-precision complex value (binary64 pair).
using Complex = std::complex<double>;

/// Integer index type used for summation ranges.
using Index = std::int64_t;

enum class Precision { standard, extended };

/// Thrown for precondition violations and numerical failures. The message is
/// part of the contract (tests match on it), so keep wording stable.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an operation would exceed its memory or term budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 6.283185307179586476925286766559005768;

}  // namespace zetasum
