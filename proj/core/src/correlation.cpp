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

#include "correlation.hpp"

#include <fftw3.h>

#include <cstring>
#include <memory>
#include <mutex>

namespace zetasum::detail {

namespace {

// FFTW's planner is not thread-safe; execution of distinct plans is.
std::mutex g_plan_mutex;

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using Buffer = std::unique_ptr<fftw_complex[], FftwFree>;

Buffer allocate(std::size_t n) {
  auto* p = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n));
  if (p == nullptr) throw BudgetError("FFT buffer allocation failed");
  std::memset(p, 0, sizeof(fftw_complex) * n);
  return Buffer(p);
}

void transform(fftw_complex* data, std::size_t n, int sign) {
  fftw_plan plan;
  {
    std::lock_guard lock(g_plan_mutex);
    plan = fftw_plan_dft_1d(static_cast<int>(n), data, data, sign, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard lock(g_plan_mutex);
  fftw_destroy_plan(plan);
}

}  // namespace

std::vector<Complex> cross_correlate(const std::vector<Complex>& left,
                                     const std::vector<Complex>& right, Index count) {
  std::size_t n = 1;
  while (n < left.size() + right.size()) n <<= 1;

  Buffer a = allocate(n);
  Buffer b = allocate(n);
  for (std::size_t k = 0; k < left.size(); ++k) {
    a[k][0] = left[k].real();
    a[k][1] = left[k].imag();
  }
  // conj(right) so that FFT(a) * conj(FFT(b)) correlates against right itself.
  for (std::size_t k = 0; k < right.size(); ++k) {
    b[k][0] = right[k].real();
    b[k][1] = -right[k].imag();
  }

  transform(a.get(), n, FFTW_FORWARD);
  transform(b.get(), n, FFTW_FORWARD);
  for (std::size_t k = 0; k < n; ++k) {
    const Complex product = Complex(a[k][0], a[k][1]) * std::conj(Complex(b[k][0], b[k][1]));
    a[k][0] = product.real();
    a[k][1] = product.imag();
  }
  transform(a.get(), n, FFTW_BACKWARD);

  std::vector<Complex> out(static_cast<std::size_t>(count));
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = Complex(a[j][0], a[j][1]) * scale;
  return out;
}

}  // namespace zetasum::detail
