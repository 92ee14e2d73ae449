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
#include <cstdint>
#include <string>
#include <vector>

#include "thetaq/exponent_vector.hpp"

namespace thetaq {

/// Probe path a(t) = (exp(t s_1), ..., exp(t s_n)) in the positive chamber.
struct RaySpec {
  std::vector<double> direction;  // s_1 >= ... >= s_n >= 0, not all zero
  std::vector<double> t_values;   // increasing, >= 0

  /// Throws DomainError("ray") when the direction or samples are malformed.
  void validate() const;
  std::vector<double> point(double t) const;
};

/// Evenly spaced samples lo, ..., hi (count >= 2).
std::vector<double> linspace(double lo, double hi, std::size_t count);

struct IntegralEstimate {
  double value = 0.0;
  double abs_error = 0.0;     // quadrature (or sampling) error plus truncation tail
  double truncation_T = 0.0;  // cube [0,T]^p in log-ratio coordinates; infinity for Monte Carlo
  std::size_t node_count = 0;
  std::string method;         // "gauss-kronrod" or "monte-carlo"
};

struct EvaluateOptions {
  double tail_fraction = 1e-9;   // truncation tail relative to the value
  double rel_tol = 1e-10;        // target |K15 - G7| / |K15|
  std::size_t max_refinements = 4;
  std::size_t mc_samples = 1'000'000;
  std::uint64_t seed = 0x5eed'7e7a'0001ULL;
};

/// Sufficient convergence test: lambda_1 + ... + lambda_j - n + 1 < 0 for
/// every j, in exact arithmetic. Necessary as well when p = n = 1.
bool converges(const ExponentVector& lambda, std::size_t n);

/// L(a, lambda) = int over b_1 >= ... >= b_p >= 1 of
///   prod_i prod_k (a_k^2 + b_i^2)^(-1/2) b_i^lambda_i db.
///
/// Computed in t_i = log(b_i / b_{i+1}) coordinates (b_{p+1} = 1), where the
/// integrand is bounded by exp(-sum_j c_j t_j) with
/// c_j = j(n-1) - (lambda_1 + ... + lambda_j). For p <= 3 a tensor
/// Gauss-Kronrod rule on panels of [0,T]^p; the exponential tail beyond T is
/// added to abs_error. For p in {4,5} importance-sampled Monte Carlo with
/// densities proportional to exp(-c_j t_j / 2). Larger p is rejected.
IntegralEstimate evaluate(const std::vector<double>& a, const ExponentVector& lambda, const EvaluateOptions& opts = {});

/// Least-squares slope of log L(a(t), lambda) against t over the ray samples.
double fit_decay(const RaySpec& ray, const ExponentVector& lambda);

/// Least-squares slope of ys against xs (at least two points).
double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys);

struct RayRatioReport {
  std::vector<double> direction;
  std::vector<double> t_values;
  std::vector<double> ratios;  // L(a(t)) / exp((1 - delta) (L(p,n)(lambda) . s) t)
  double max_ratio = 0.0;
  double trend_slope = 0.0;    // slope of log ratio over the later half of the samples
  bool bounded = false;
  bool non_increasing_trend = false;
  bool pass() const { return bounded && non_increasing_trend; }
};

struct GrowthBoundReport {
  ExponentVector bound;  // L(p,n)(lambda)
  double delta = 0.0;
  std::vector<RayRatioReport> rays;
  bool pass() const;
};

/// Empirical check that L(a, lambda) is weakly bounded by a^{L(p,n)(lambda)}
/// along each ray. The ratio must stay finite and its log must not trend
/// upward over the later half of the samples.
GrowthBoundReport check_growth_bound(const ExponentVector& lambda, std::size_t n, const std::vector<RaySpec>& rays, double delta);

/// Edges of the positive chamber, (1,0,...,0), (1,1,0,...,0), ..., (1,...,1),
/// each sampled at `t_values`. The first is the only coordinate ray inside
/// the chamber and the last is the diagonal.
std::vector<RaySpec> standard_rays(std::size_t n, const std::vector<double>& t_values);

}  // namespace thetaq
