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

#include "thetaq/oscillator.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "thetaq/error.hpp"
#include "thetaq/kernels.hpp"

namespace thetaq {

namespace {

void check_torus(const std::vector<double>& a, const char* what) {
  if (a.empty()) throw DomainError("dimension", std::string(what) + " must be non-empty");
  for (double x : a) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("torus-positive", std::string(what) + " entries must be positive and finite");
  }
}

void check_indices(const std::vector<double>& a, const std::vector<int>& alpha, const std::vector<int>& beta) {
  check_torus(a, "a");
  if (alpha.size() != a.size() || beta.size() != a.size()) {
    throw DomainError("dimension", "a, alpha and beta must have the same length");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (alpha[i] < 0 || beta[i] < 0) throw DomainError("hermite-index", "monomial exponents must be >= 0");
  }
}

// Bound on the two-sided tail beyond L of u^m exp(-u^2/2); valid for m <= 73.
double gaussian_tail(int m, double L) {
  const double lead = m == 0 ? 1.0 / L : std::pow(L, m - 1);
  return 4.0 * lead * std::exp(-0.5 * L * L);
}

}  // namespace

double gaussian_moment(int m) {
  if (m < 0) throw DomainError("hermite-index", "moment order must be >= 0");
  if (m % 2 != 0) return 0.0;
  double df = 1.0;
  for (int k = m - 1; k > 1; k -= 2) df *= k;
  return df * std::sqrt(2.0 * std::numbers::pi);
}

double oscillator_constant(const std::vector<int>& alpha, const std::vector<int>& beta) {
  if (alpha.size() != beta.size()) throw DomainError("dimension", "alpha and beta must have the same length");
  double c = 1.0;
  for (std::size_t i = 0; i < alpha.size(); ++i) c *= gaussian_moment(alpha[i] + beta[i]);
  return c;
}

double oscillator_coefficient(const std::vector<double>& a, const std::vector<int>& alpha, const std::vector<int>& beta) {
  check_indices(a, alpha, beta);
  double out = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int m = alpha[i] + beta[i];
    if (m % 2 != 0) return 0.0;
    out *= gaussian_moment(m) * std::pow(a[i], alpha[i] + 0.5) * std::pow(1.0 + a[i] * a[i], -0.5 * (m + 1));
  }
  return out;
}

double oscillator_bound(const std::vector<double>& a) {
  check_torus(a, "a");
  double out = 1.0;
  for (double x : a) out /= std::sqrt(x + 1.0 / x);
  return out;
}

QuadratureResult oscillator_quadrature(const std::vector<double>& a, const std::vector<int>& alpha,
                                       const std::vector<int>& beta) {
  check_indices(a, alpha, beta);
  using boost::math::quadrature::gauss_kronrod;
  // Errors compose through the product: prod(|v| + e) - prod |v|.
  double value = 1.0, magnitude = 1.0, widened = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ai = a[i];
    const int m = alpha[i] + beta[i];
    const double sigma = 1.0 / std::sqrt(ai * ai + 1.0);
    const double prefactor = std::pow(ai, alpha[i] + 0.5);
    auto f = [&](double x) { return std::pow(x, m) * std::exp(-0.5 * x * x / (sigma * sigma)); };
    const double L = 12.0 * sigma;
    double err = 0.0, l1 = 0.0;
    const double v = prefactor * gauss_kronrod<double, 61>::integrate(f, -L, L, 15, 1e-14, &err, &l1);
    // Boost reports error relative to the L1 norm and may report zero once
    // Kronrod and Gauss agree exactly, so rounding is added as a floor.
    // The tail is rescaled from u = x / sigma.
    const double tail = prefactor * std::pow(sigma, m + 1) * gaussian_tail(m, 12.0);
    const double rel = std::max(err, 8.0 * std::numeric_limits<double>::epsilon());
    const double abs_i = prefactor * l1 * rel + tail;
    value *= v;
    magnitude *= std::abs(v);
    widened *= std::abs(v) + abs_i;
  }
  return QuadratureResult{value, widened - magnitude};
}

double h_kernel(const std::vector<double>& a, const std::vector<double>& b) {
  check_torus(a, "a");
  check_torus(b, "b");
  std::vector<double> shift(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) shift[k] = a[k] * a[k] + 1.0 / (a[k] * a[k]);
  std::vector<double> rows(b.size());
  kernels::h_factor(b.data(), b.size(), shift.data(), shift.size(), rows.data());
  double out = 1.0;
  for (double r : rows) out *= r;
  return out;
}

double dual_pair_bound(const std::vector<double>& a, const std::vector<double>& b, int q) {
  const int p = static_cast<int>(b.size());
  if (q < p) throw DomainError("orthogonal-order", "dual_pair_bound needs q >= p");
  double out = h_kernel(a, b);
  for (double x : a) out *= std::pow(x + 1.0 / x, -0.5 * (q - p));
  return out;
}

}  // namespace thetaq
