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

#include <cmath>

#include "thetaq/kernels.hpp"

namespace thetaq::kernels::scalar {

void twisted_factor(const double* growth, const double* decay_sq, std::size_t count, const double* a_sq,
                    std::size_t n, double inv_x_sq, double scale, double* out) {
  for (std::size_t j = 0; j < count; ++j) {
    const double d = decay_sq[j] * inv_x_sq;
    double prod = 1.0;
    for (std::size_t k = 0; k < n; ++k) prod = prod * (1.0 + a_sq[k] * d);
    out[j] = (scale * growth[j]) / std::sqrt(prod);
  }
}

void h_factor(const double* b, std::size_t count, const double* shift, std::size_t n, double* out) {
  for (std::size_t j = 0; j < count; ++j) {
    const double b2 = b[j] * b[j];
    const double base = b2 + 1.0 / b2;
    double prod = 1.0;
    for (std::size_t k = 0; k < n; ++k) prod = prod * (base + shift[k]);
    out[j] = 1.0 / std::sqrt(prod);
  }
}

}  // namespace thetaq::kernels::scalar
