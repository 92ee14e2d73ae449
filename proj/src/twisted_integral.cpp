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

#include "thetaq/twisted_integral.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <random>

#include "thetaq/error.hpp"
#include "thetaq/kernels.hpp"
#include "thetaq/lpn.hpp"

namespace thetaq {

namespace {

// Nodes and weights of a composite 15-point Kronrod rule with its embedded
// 7-point Gauss rule (zero Gauss weight at Kronrod-only nodes).
struct Rule1d {
  std::vector<double> t, wk, wg;
};

struct Reference15 {
  double x[15];
  double wk[15];
  double wg[15];
};

const Reference15& reference15() {
  static const Reference15 ref = [] {
    using K = boost::math::quadrature::gauss_kronrod<double, 15>;
    using G = boost::math::quadrature::gauss<double, 7>;
    const auto& kx = K::abscissa();
    const auto& kw = K::weights();
    const auto& gw = G::weights();
    Reference15 r{};
    // Index 7 is the midpoint; 7 - i and 7 + i mirror each other.
    for (std::size_t i = 0; i < 8; ++i) {
      const double g = i % 2 == 0 ? gw[i / 2] : 0.0;
      r.x[7 + i] = kx[i];
      r.x[7 - i] = -kx[i];
      r.wk[7 + i] = r.wk[7 - i] = kw[i];
      r.wg[7 + i] = r.wg[7 - i] = g;
    }
    return r;
  }();
  return ref;
}

// Panels of width h up to `pivot`, then widths growing by 1.5 until T.
Rule1d build_rule(double T, double pivot, double h) {
  std::vector<double> edges{0.0};
  double w = h;
  while (edges.back() < T) {
    const double lo = edges.back();
    if (lo >= pivot) w *= 1.5;
    edges.push_back(std::min(T, lo + w));
  }
  const auto& ref = reference15();
  Rule1d rule;
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const double mid = 0.5 * (edges[e] + edges[e + 1]);
    const double hw = 0.5 * (edges[e + 1] - edges[e]);
    for (std::size_t i = 0; i < 15; ++i) {
      rule.t.push_back(mid + hw * ref.x[i]);
      rule.wk.push_back(hw * ref.wk[i]);
      rule.wg.push_back(hw * ref.wg[i]);
    }
  }
  return rule;
}

// Per-coordinate decay rates c_j = j(n-1) - (lambda_1 + ... + lambda_j).
std::vector<double> decay_rates(const ExponentVector& lambda, std::size_t n) {
  std::vector<double> c;
  Rational prefix = 0;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    prefix += lambda[j];
    const Rational cj = Rational(static_cast<long>((j + 1) * (n - 1))) - prefix;
    c.push_back(cj.get_d());
  }
  return c;
}

// Bound on the integral of exp(-sum c_j t_j) outside [0,T]^p.
double tail_bound(const std::vector<double>& c, double T) {
  double inv_prod = 1.0;
  for (double x : c) inv_prod /= x;
  double s = 0.0;
  for (double x : c) s += std::exp(-x * T);
  return inv_prod * s;
}

double chamber_factor(const std::vector<double>& a_sq, double log_b) {
  const double d = std::exp(-2.0 * log_b);
  double prod = 1.0;
  for (double x : a_sq) prod = prod * (1.0 + x * d);
  return 1.0 / std::sqrt(prod);
}

struct TensorEval {
  const std::vector<Rule1d>& rules;
  const std::vector<std::vector<double>>& expc;  // exp(-c_l t) per node
  const std::vector<double>& a_sq;
  std::vector<double> inner_gk, inner_gg, inner_decay, buf;

  // Returns (Kronrod, Gauss) sums of level `l` and below, given the outer
  // partial log b and outer weight products.
  std::pair<double, double> run(std::size_t l, double outer_log_b, double sk, double sg) {
    if (l == 0) {
      const std::size_t m = inner_gk.size();
      const double inv_x_sq = std::exp(-2.0 * outer_log_b);
      kernels::twisted_factor(inner_gk.data(), inner_decay.data(), m, a_sq.data(), a_sq.size(), inv_x_sq, sk, buf.data());
      const double k = kernels::pairwise_sum(buf.data(), m);
      double g = 0.0;
      if (sg != 0.0) {
        kernels::twisted_factor(inner_gg.data(), inner_decay.data(), m, a_sq.data(), a_sq.size(), inv_x_sq, sg, buf.data());
        g = kernels::pairwise_sum(buf.data(), m);
      }
      return {k, g};
    }
    const Rule1d& r = rules[l];
    std::vector<double> ks(r.t.size()), gs(r.t.size());
    for (std::size_t j = 0; j < r.t.size(); ++j) {
      const double log_b = outer_log_b + r.t[j];
      const double f = chamber_factor(a_sq, log_b) * expc[l][j];
      auto [k, g] = run(l - 1, log_b, sk * r.wk[j] * f, sg * r.wg[j] * f);
      ks[j] = k;
      gs[j] = g;
    }
    return {kernels::pairwise_sum(ks.data(), ks.size()), kernels::pairwise_sum(gs.data(), gs.size())};
  }
};

IntegralEstimate tensor_estimate(const std::vector<double>& a_sq, const std::vector<double>& c, double T, double pivot,
                                 double h) {
  const std::size_t p = c.size();
  std::vector<Rule1d> rules;
  std::vector<std::vector<double>> expc;
  for (std::size_t l = 0; l < p; ++l) {
    rules.push_back(build_rule(T, pivot, h));
    std::vector<double> e;
    for (double t : rules.back().t) e.push_back(std::exp(-c[l] * t));
    expc.push_back(std::move(e));
  }
  TensorEval ev{rules, expc, a_sq, {}, {}, {}, {}};
  const Rule1d& r0 = rules[0];
  for (std::size_t j = 0; j < r0.t.size(); ++j) {
    ev.inner_gk.push_back(r0.wk[j] * expc[0][j]);
    ev.inner_gg.push_back(r0.wg[j] * expc[0][j]);
    ev.inner_decay.push_back(std::exp(-2.0 * r0.t[j]));
  }
  ev.buf.resize(r0.t.size());
  auto [k, g] = ev.run(p - 1, 0.0, 1.0, 1.0);

  IntegralEstimate est;
  est.value = k;
  est.abs_error = std::abs(k - g);
  est.truncation_T = T;
  est.node_count = 1;
  for (const auto& r : rules) est.node_count *= r.t.size();
  est.method = "gauss-kronrod";
  return est;
}

IntegralEstimate monte_carlo(const std::vector<double>& a_sq, const std::vector<double>& c, const EvaluateOptions& opts) {
  const std::size_t p = c.size();
  std::mt19937_64 rng(opts.seed);
  std::vector<std::exponential_distribution<double>> dist;
  double inv_rate_prod = 1.0;
  for (double x : c) {
    dist.emplace_back(0.5 * x);
    inv_rate_prod /= 0.5 * x;
  }
  std::vector<double> vals(opts.mc_samples), sq(opts.mc_samples);
  std::vector<double> t(p);
  for (std::size_t s = 0; s < opts.mc_samples; ++s) {
    double expo = 0.0;
    for (std::size_t l = 0; l < p; ++l) {
      t[l] = dist[l](rng);
      expo -= 0.5 * c[l] * t[l];
    }
    double w = std::exp(expo) * inv_rate_prod;
    double log_b = 0.0;
    for (std::size_t l = p; l-- > 0;) {
      log_b += t[l];
      w *= chamber_factor(a_sq, log_b);
    }
    vals[s] = w;
    sq[s] = w * w;
  }
  const double N = static_cast<double>(opts.mc_samples);
  const double mean = kernels::pairwise_sum(vals.data(), vals.size()) / N;
  const double var = std::max(0.0, kernels::pairwise_sum(sq.data(), sq.size()) / N - mean * mean);
  IntegralEstimate est;
  est.value = mean;
  est.abs_error = 3.0 * std::sqrt(var / N);
  est.truncation_T = std::numeric_limits<double>::infinity();
  est.node_count = opts.mc_samples;
  est.method = "monte-carlo";
  return est;
}

}  // namespace

void RaySpec::validate() const {
  if (direction.empty()) throw DomainError("ray", "direction must be non-empty");
  bool nonzero = false;
  for (std::size_t k = 0; k < direction.size(); ++k) {
    if (!(direction[k] >= 0.0)) throw DomainError("ray", "direction entries must be >= 0");
    if (k > 0 && direction[k] > direction[k - 1]) throw DomainError("ray", "direction must be non-increasing");
    nonzero = nonzero || direction[k] > 0.0;
  }
  if (!nonzero) throw DomainError("ray", "direction must be nonzero");
  for (std::size_t i = 0; i < t_values.size(); ++i) {
    if (!(t_values[i] >= 0.0)) throw DomainError("ray", "t values must be >= 0");
    if (i > 0 && !(t_values[i] > t_values[i - 1])) throw DomainError("ray", "t values must increase");
  }
}

std::vector<double> RaySpec::point(double t) const {
  std::vector<double> a;
  for (double s : direction) a.push_back(std::exp(t * s));
  return a;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count < 2) throw DomainError("samples", "need at least two samples");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  return out;
}

bool converges(const ExponentVector& lambda, std::size_t n) {
  const Rational shift(static_cast<long>(n) - 1);
  for (const auto& s : lambda.prefix_sums()) {
    if (s - shift >= 0) return false;
  }
  return true;
}

IntegralEstimate evaluate(const std::vector<double>& a, const ExponentVector& lambda, const EvaluateOptions& opts) {
  const std::size_t n = a.size();
  const std::size_t p = lambda.size();
  if (n == 0) throw DomainError("dimension", "a must be non-empty");
  for (double x : a) {
    if (!(x >= 1.0) || !std::isfinite(x)) throw DomainError("torus-chamber", "a entries must be finite and >= 1");
  }
  if (!converges(lambda, n)) {
    throw DomainError("integral-converges", "lambda " + to_string(lambda) + " fails the convergence criterion for n = " + std::to_string(n));
  }
  if (p > 5) throw DomainError("integral-dimension", "p > 5 is not supported");

  std::vector<double> a_sq;
  double log_a_max = 0.0;
  for (double x : a) {
    a_sq.push_back(x * x);
    log_a_max = std::max(log_a_max, std::log(x));
  }
  const std::vector<double> c = decay_rates(lambda, n);
  if (p >= 4) return monte_carlo(a_sq, c, opts);

  const double c_min = *std::min_element(c.begin(), c.end());
  double T = std::log(static_cast<double>(p) / (opts.tail_fraction * 1e-3)) / c_min;
  T = std::max(T, log_a_max + 4.0);
  const double pivot = log_a_max + 4.0;

  IntegralEstimate est;
  for (int attempt = 0; attempt < 8; ++attempt) {
    double h = 0.5;
    est = tensor_estimate(a_sq, c, T, pivot, h);
    for (std::size_t r = 0; r < opts.max_refinements && est.abs_error > opts.rel_tol * std::abs(est.value); ++r) {
      h *= 0.5;
      est = tensor_estimate(a_sq, c, T, pivot, h);
    }
    const double tail = tail_bound(c, T);
    if (tail <= opts.tail_fraction * std::abs(est.value) || attempt == 7) {
      est.abs_error += tail;
      break;
    }
    // Push T out by the missing number of e-folds of the slowest rate.
    T += (std::log(tail / (opts.tail_fraction * std::abs(est.value))) + 1.0) / c_min;
  }
  return est;
}

double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw DomainError("samples", "slope fit needs at least two paired samples");
  const double N = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= N;
  my /= N;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

double fit_decay(const RaySpec& ray, const ExponentVector& lambda) {
  ray.validate();
  if (ray.t_values.size() < 3) throw DomainError("samples", "fit_decay needs at least 3 t values");
  std::vector<double> logs;
  for (double t : ray.t_values) logs.push_back(std::log(evaluate(ray.point(t), lambda).value));
  return lsq_slope(ray.t_values, logs);
}

bool GrowthBoundReport::pass() const {
  return std::all_of(rays.begin(), rays.end(), [](const RayRatioReport& r) { return r.pass(); });
}

GrowthBoundReport check_growth_bound(const ExponentVector& lambda, std::size_t n, const std::vector<RaySpec>& rays, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta", "delta must lie in (0,1)");
  GrowthBoundReport report{lpn(lambda, n).output, delta, {}};
  for (const auto& ray : rays) {
    ray.validate();
    if (ray.direction.size() != n) throw DomainError("dimension", "ray direction must have length n");
    if (ray.t_values.size() < 4) throw DomainError("samples", "check_growth_bound needs at least 4 t values per ray");
    double rate = 0.0;
    for (std::size_t k = 0; k < n; ++k) rate += report.bound[k].get_d() * ray.direction[k];

    RayRatioReport rr;
    rr.direction = ray.direction;
    rr.t_values = ray.t_values;
    std::vector<double> log_ratio;
    for (double t : ray.t_values) {
      const double v = evaluate(ray.point(t), lambda).value;
      const double lr = std::log(v) - (1.0 - delta) * rate * t;
      log_ratio.push_back(lr);
      rr.ratios.push_back(std::exp(lr));
    }
    rr.max_ratio = *std::max_element(rr.ratios.begin(), rr.ratios.end());
    rr.bounded = std::all_of(rr.ratios.begin(), rr.ratios.end(), [](double x) { return std::isfinite(x) && x > 0.0; });
    const std::size_t half = ray.t_values.size() / 2;
    const std::vector<double> ts(ray.t_values.begin() + static_cast<std::ptrdiff_t>(half), ray.t_values.end());
    const std::vector<double> ls(log_ratio.begin() + static_cast<std::ptrdiff_t>(half), log_ratio.end());
    rr.trend_slope = lsq_slope(ts, ls);
    rr.non_increasing_trend = rr.trend_slope <= 0.0;
    report.rays.push_back(std::move(rr));
  }
  return report;
}

std::vector<RaySpec> standard_rays(std::size_t n, const std::vector<double>& t_values) {
  std::vector<RaySpec> rays;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<double> s(n, 0.0);
    std::fill(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k), 1.0);
    rays.push_back(RaySpec{std::move(s), t_values});
  }
  return rays;
}

}  // namespace thetaq
