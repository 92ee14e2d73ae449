// Copyright 2026 The thetaq Authors
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

#include <immintrin.h>

#include "thetaq/kernels.hpp"

// Compiled with -mavx2 only; callers reach it through the dispatcher after a
// CPU check. The tails fall back to the scalar kernel so op order matches.

namespace thetaq::kernels::avx2 {

void twisted_factor(const double* growth, const double* decay_sq, std::size_t count, const double* a_sq,
                    std::size_t n, double inv_x_sq, double scale, double* out) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d vinv = _mm256_set1_pd(inv_x_sq);
  const __m256d vscale = _mm256_set1_pd(scale);
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d d = _mm256_mul_pd(_mm256_loadu_pd(decay_sq + j), vinv);
    __m256d prod = one;
    for (std::size_t k = 0; k < n; ++k) {
      prod = _mm256_mul_pd(prod, _mm256_add_pd(one, _mm256_mul_pd(_mm256_set1_pd(a_sq[k]), d)));
    }
    const __m256d num = _mm256_mul_pd(vscale, _mm256_loadu_pd(growth + j));
    _mm256_storeu_pd(out + j, _mm256_div_pd(num, _mm256_sqrt_pd(prod)));
  }
  scalar::twisted_factor(growth + j, decay_sq + j, count - j, a_sq, n, inv_x_sq, scale, out + j);
}

void h_factor(const double* b, std::size_t count, const double* shift, std::size_t n, double* out) {
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d vb = _mm256_loadu_pd(b + j);
    const __m256d b2 = _mm256_mul_pd(vb, vb);
    const __m256d base = _mm256_add_pd(b2, _mm256_div_pd(one, b2));
    __m256d prod = one;
    for (std::size_t k = 0; k < n; ++k) {
      prod = _mm256_mul_pd(prod, _mm256_add_pd(base, _mm256_set1_pd(shift[k])));
    }
    _mm256_storeu_pd(out + j, _mm256_div_pd(one, _mm256_sqrt_pd(prod)));
  }
  scalar::h_factor(b + j, count - j, shift, n, out + j);
}

}  // namespace thetaq::kernels::avx2
