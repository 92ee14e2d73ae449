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

#include <vector>

namespace thetaq {

/// Closed-form torus matrix coefficient of the oscillator representation
/// between the monomial vectors x^alpha * mu and x^beta * mu, mu the
/// standard Gaussian:
///
///   prod_i c(alpha_i, beta_i) a_i^(alpha_i + 1/2) (1 + a_i^2)^(-(alpha_i + beta_i + 1)/2)
///
/// with c(alpha, beta) the Gaussian moment of order alpha + beta. The
/// metaplectic sign is dropped; only the modulus enters later bounds.
/// Exactly zero when some alpha_i + beta_i is odd.
double oscillator_coefficient(const std::vector<double>& a, const std::vector<int>& alpha, const std::vector<int>& beta);

/// int u^m exp(-u^2/2) du over the line: (m-1)!! sqrt(2 pi) for even m, else 0.
double gaussian_moment(int m);

/// prod_i c(alpha_i, beta_i); bounds |coefficient| / oscillator_bound over a >= 1.
double oscillator_constant(const std::vector<int>& alpha, const std::vector<int>& beta);

/// prod_i (a_i + 1/a_i)^(-1/2).
double oscillator_bound(const std::vector<double>& a);

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
};

/// The same coefficient by direct numerical integration of
/// prod_i a_i^(1/2) (a_i x)^alpha_i x^beta_i exp(-(a_i^2 + 1) x^2 / 2),
/// one adaptive Gauss-Kronrod integral per coordinate on twelve standard
/// deviations, plus an analytic Gaussian tail bound.
QuadratureResult oscillator_quadrature(const std::vector<double>& a, const std::vector<int>& alpha,
                                       const std::vector<int>& beta);

/// H(a,b) = prod_{i<=p} prod_{j<=n} (b_i^2 + b_i^-2 + a_j^2 + a_j^-2)^(-1/2).
double h_kernel(const std::vector<double>& a, const std::vector<double>& b);

/// H(a,b) * prod_j (a_j + 1/a_j)^(-(q-p)/2) with p = b.size(); requires q >= p.
double dual_pair_bound(const std::vector<double>& a, const std::vector<double>& b, int q);

}  // namespace thetaq
