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
// Compensated (Neumaier) complex summation and the deterministic chunked
// reduction used by every long sum in the library.

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "zetasum/common.hpp"
#include "zetasum/kernel/parallel.hpp"

namespace zetasum::kernel {

/// Terms per chunk in chunked reductions. Changing it changes results in the
/// last bits, so golden files depend on it.
inline constexpr Index kChunkSize = 4096;

class Accumulator {
 public:
  void add(Complex term) {
    add_component(sum_re_, comp_re_, term.real());
    add_component(sum_im_, comp_im_, term.imag());
    ++count_;
  }

  /// Compensated merge of another partial sum (the reduction operator).
  void merge(const Accumulator& other);

  [[nodiscard]] Complex result() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }
  [[nodiscard]] Complex running_sum() const { return {sum_re_, sum_im_}; }
  [[nodiscard]] Complex compensation() const { return {comp_re_, comp_im_}; }
  [[nodiscard]] Index count() const { return count_; }

 private:
  static void add_component(double& sum, double& comp, double x) {
    const double s = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - s) + x;
    } else {
      comp += (x - s) + sum;
    }
    sum = s;
  }

  double sum_re_ = 0.0;
  double sum_im_ = 0.0;
  double comp_re_ = 0.0;
  double comp_im_ = 0.0;
  Index count_ = 0;
};

/// Neumaier sum of the terms. Throws Error("non-finite input") on NaN/Inf.
Complex sum_compensated(std::span<const Complex> terms);

/// Pairwise reduction over chunk partial sums: adjacent pairs are merged level
/// by level, an odd trailing element is carried up unchanged. The association
/// depends only on the number of chunks.
Accumulator reduce_deterministic(std::span<const Accumulator> chunks);

/// Convenience for callers holding plain chunk values.
Complex reduce_deterministic(std::span<const Complex> chunk_sums);

/// Sum of term(i) for i in [lo, hi], split into kChunkSize chunks that are
/// evaluated in parallel and reduced deterministically. Empty when hi < lo.
template <typename Term>
Accumulator chunked_sum(Index lo, Index hi, Term&& term) {
  if (hi < lo) return {};
  const Index n = hi - lo + 1;
  const Index chunks = (n + kChunkSize - 1) / kChunkSize;
  std::vector<Accumulator> partial(static_cast<std::size_t>(chunks));
  parallel_for(chunks, [&](Index c) {
    Accumulator acc;
    const Index begin = lo + c * kChunkSize;
    const Index end = std::min(hi, begin + kChunkSize - 1);
    for (Index i = begin; i <= end; ++i) acc.add(term(i));
    partial[static_cast<std::size_t>(c)] = acc;
  });
  return reduce_deterministic(partial);
}

}  // namespace zetasum::kernel
