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

#include "zetasum/kernel/accumulator.hpp"

#include <cmath>

#include "zetasum/kernel/double_double.hpp"

namespace zetasum::kernel {

void Accumulator::merge(const Accumulator& other) {
  const DoubleDouble re = dd_detail::two_sum(sum_re_, other.sum_re_);
  const DoubleDouble im = dd_detail::two_sum(sum_im_, other.sum_im_);
  sum_re_ = re.hi;
  sum_im_ = im.hi;
  comp_re_ = comp_re_ + other.comp_re_ + re.lo;
  comp_im_ = comp_im_ + other.comp_im_ + im.lo;
  count_ += other.count_;
}

Complex sum_compensated(std::span<const Complex> terms) {
  Accumulator acc;
  for (const Complex& z : terms) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw Error("non-finite input");
    acc.add(z);
  }
  return acc.result();
}

Accumulator reduce_deterministic(std::span<const Accumulator> chunks) {
  if (chunks.empty()) return {};
  std::vector<Accumulator> level(chunks.begin(), chunks.end());
  while (level.size() > 1) {
    std::vector<Accumulator> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      Accumulator merged = level[i];
      merged.merge(level[i + 1]);
      next.push_back(merged);
    }
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

Complex reduce_deterministic(std::span<const Complex> chunk_sums) {
  std::vector<Accumulator> chunks(chunk_sums.size());
  for (std::size_t i = 0; i < chunk_sums.size(); ++i) chunks[i].add(chunk_sums[i]);
  return reduce_deterministic(std::span<const Accumulator>(chunks)).result();
}

}  // namespace zetasum::kernel
