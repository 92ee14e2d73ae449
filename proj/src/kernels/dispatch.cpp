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

#include <atomic>

#include "thetaq/error.hpp"
#include "thetaq/kernels.hpp"

namespace thetaq::kernels {

namespace {

Backend detect() noexcept { return avx2_available() ? Backend::Avx2 : Backend::Scalar; }

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{detect()};
  return b;
}

}  // namespace

bool avx2_available() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() noexcept { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_available()) throw Error("AVX2 backend requested but the CPU lacks AVX2");
  current().store(b, std::memory_order_relaxed);
}

const char* backend_name(Backend b) noexcept { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void twisted_factor(const double* growth, const double* decay_sq, std::size_t count, const double* a_sq,
                    std::size_t n, double inv_x_sq, double scale, double* out) {
  if (active_backend() == Backend::Avx2) {
    avx2::twisted_factor(growth, decay_sq, count, a_sq, n, inv_x_sq, scale, out);
  } else {
    scalar::twisted_factor(growth, decay_sq, count, a_sq, n, inv_x_sq, scale, out);
  }
}

void h_factor(const double* b, std::size_t count, const double* shift, std::size_t n, double* out) {
  if (active_backend() == Backend::Avx2) {
    avx2::h_factor(b, count, shift, n, out);
  } else {
    scalar::h_factor(b, count, shift, n, out);
  }
}

double pairwise_sum(const double* x, std::size_t count) noexcept {
  if (count <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < count; ++i) s += x[i];
    return s;
  }
  const std::size_t half = count / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, count - half);
}

}  // namespace thetaq::kernels
