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

#pragma once

#include <cstddef>

namespace thetaq::kernels {

/// Inner loops of the quadrature modules. Every backend performs the same
/// IEEE operations in the same order (no fused multiply-add), so results are
/// bit-identical across backends, not merely close.
enum class Backend { Scalar, Avx2 };

bool avx2_available() noexcept;

/// Backend used by the dispatching entry points. Defaults to AVX2 when the
/// CPU supports it.
Backend active_backend() noexcept;

/// Forces a backend; throws thetaq::Error when it is not supported here.
void set_backend(Backend b);

const char* backend_name(Backend b) noexcept;

/// out[j] = scale * growth[j] / sqrt(prod_k (1 + a_sq[k] * (decay_sq[j] * inv_x_sq)))
///
/// One batch of twisted-integral nodes along the innermost coordinate.
/// `growth` carries the quadrature weight times the monomial part.
void twisted_factor(const double* growth, const double* decay_sq, std::size_t count, const double* a_sq,
                    std::size_t n, double inv_x_sq, double scale, double* out);

/// out[j] = 1 / sqrt(prod_k (b[j]^2 + b[j]^-2 + shift[k]))
///
/// With shift[k] = a_k^2 + a_k^-2 this is one row of the dual-pair kernel.
void h_factor(const double* b, std::size_t count, const double* shift, std::size_t n, double* out);

/// Deterministic pairwise summation: recursive halving down to runs of at
/// most 8 terms, each summed left to right.
double pairwise_sum(const double* x, std::size_t count) noexcept;

namespace scalar {
void twisted_factor(const double* growth, const double* decay_sq, std::size_t count, const double* a_sq,
                    std::size_t n, double inv_x_sq, double scale, double* out);
void h_factor(const double* b, std::size_t count, const double* shift, std::size_t n, double* out);
}  // namespace scalar

namespace avx2 {
void twisted_factor(const double* growth, const double* decay_sq, std::size_t count, const double* a_sq,
                    std::size_t n, double inv_x_sq, double scale, double* out);
void h_factor(const double* b, std::size_t count, const double* shift, std::size_t n, double* out);
}  // namespace avx2

}  // namespace thetaq::kernels
