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

#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>

#include "helpers.hpp"
#include "thetaq/error.hpp"
#include "thetaq/lpn.hpp"
#include "thetaq/twisted_integral.hpp"

using namespace thetaq;
using thetaq::test::ev;

namespace {

// Independent one-dimensional value of L(a, lambda) for p = n = 1 from the
// rescaled form a^lambda * int_{b >= 1/a} (1 + b^2)^(-1/2) b^lambda db.
double rescaled_1d(double a, double lambda) {
  boost::math::quadrature::exp_sinh<double> integrator;
  const double lo = 1.0 / a;
  auto f = [&](double u) {
    const double b = lo + u;
    return std::pow(b, lambda) / std::sqrt(1.0 + b * b);
  };
  return std::pow(a, lambda) * integrator.integrate(f, 1e-13);
}

const double kS = std::sqrt(2.0) - 1.0;  // int_1^inf b^-2 (1+b^2)^-1/2 db

}  // namespace

TEST_CASE("convergence criterion") {
  CHECK(converges(ev("-1/2"), 1));
  CHECK_FALSE(converges(ev("0"), 1));
  CHECK(converges(ev("1,-4"), 3));
  CHECK_FALSE(converges(ev("1,1"), 2));
}

TEST_CASE("single variable value at the identity") {
  const auto r = evaluate({1.0}, ev("-2"));
  CHECK(r.value == doctest::Approx(kS).epsilon(1e-11));
  CHECK(std::abs(r.value - kS) <= r.abs_error + 1e-15);
  CHECK(r.method == "gauss-kronrod");
  CHECK(r.abs_error >= 0.0);
}

TEST_CASE("symmetric products pin p = 2 and p = 3") {
  // With n = 1, a = 1 and equal exponents the ordered region is 1/p! of the cube.
  CHECK(evaluate({1.0}, ev("-2,-2")).value == doctest::Approx(kS * kS / 2).epsilon(1e-10));
  CHECK(evaluate({1.0}, ev("-2,-2,-2")).value == doctest::Approx(kS * kS * kS / 6).epsilon(1e-9));
}

TEST_CASE("monte carlo for p = 4 agrees with the symmetric product") {
  const auto r = evaluate({1.0}, ev("-2,-2,-2,-2"));
  const double exact = std::pow(kS, 4) / 24;
  CHECK(r.method == "monte-carlo");
  CHECK(std::abs(r.value - exact) <= r.abs_error);
  CHECK(r.abs_error < 0.05 * exact);
}

TEST_CASE("rescaled single variable identity") {
  for (double lambda : {-0.25, -0.5, -1.0, -1.5, -2.5}) {
    for (double a : {1.0, 2.0, 7.5, std::exp(3.0), std::exp(6.0)}) {
      const double ref = rescaled_1d(a, lambda);
      const double v = evaluate({a}, ExponentVector({Rational(static_cast<long>(lambda * 4), 4)})).value;
      CAPTURE(lambda);
      CAPTURE(a);
      CHECK(std::abs(v - ref) <= 1e-6 * ref);
    }
  }
}

TEST_CASE("single variable growth regimes") {
  double lo = INFINITY, hi = 0;
  for (int k = 0; k <= 8; ++k) {
    const double a = std::exp(2.0 + 0.5 * k);
    const double scaled = std::sqrt(a) * evaluate({a}, ev("-1/2")).value;
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  CHECK(lo > 0.0);
  CHECK(hi / lo < 2.0);

  lo = INFINITY;
  hi = 0;
  for (int k = 0; k <= 8; ++k) {
    const double a = std::exp(2.0 + 0.5 * k);
    const double scaled = a * evaluate({a}, ev("-3/2")).value;
    lo = std::min(lo, scaled);
    hi = std::max(hi, scaled);
  }
  CHECK(lo > 0.0);
  CHECK(hi / lo < 2.0);
}

TEST_CASE("convergence dichotomy in one variable") {
  CHECK_THROWS_AS(evaluate({1.0}, ev("0")), DomainError);
  CHECK_THROWS_AS(evaluate({1.0}, ev("1/2")), DomainError);
  // Values blow up as lambda approaches zero from below.
  double prev = 0.0;
  for (int k = 1; k <= 6; ++k) {
    const double v = evaluate({1.0}, ExponentVector({Rational(-1, 1L << k)})).value;
    CHECK(v > prev);
    prev = v;
  }
  CHECK(prev > 30.0);
}

TEST_CASE("truncation is sound") {
  EvaluateOptions loose, tight;
  tight.tail_fraction = 1e-14;
  for (const char* lam : {"-1/2", "-1,-2", "-3/2,-1,-1"}) {
    const auto lambda = ev(lam);
    const std::vector<double> a(2, 3.0);
    const auto r1 = evaluate(a, lambda, loose);
    const auto r2 = evaluate(a, lambda, tight);
    CAPTURE(lam);
    CHECK(r2.truncation_T > r1.truncation_T);
    CHECK(std::abs(r1.value - r2.value) <= r1.abs_error + r2.abs_error);
  }
}

TEST_CASE("values decrease in each torus coordinate") {
  const auto lambda = ev("-1,-2");
  double prev = evaluate({1.0, 1.0}, lambda).value;
  for (int k = 1; k <= 8; ++k) {
    const double x = std::exp(0.5 * k);
    const double v = evaluate({x, 1.0}, lambda).value;
    CHECK(v < prev);
    CHECK(evaluate({x, x}, lambda).value < v);
    prev = v;
  }
}

TEST_CASE("evaluate preconditions") {
  CHECK_THROWS_AS(evaluate({0.5}, ev("-2")), DomainError);
  CHECK_THROWS_AS(evaluate({1.0}, ev("-2,-2,-2,-2,-2,-2")), DomainError);
}

TEST_CASE("fitted decay rates on a late window") {
  const auto t = linspace(6.0, 12.0, 13);
  CHECK(fit_decay({{1.0}, t}, ev("-1/2")) == doctest::Approx(-0.5).epsilon(0.1));
  CHECK(std::abs(fit_decay({{1.0}, t}, ev("-5/2")) + 1.0) < 0.05);
  const double diag = fit_decay({{1.0, 1.0}, linspace(1.0, 6.0, 11)}, ev("-1,-2"));
  const auto mu = lpn(ev("-1,-2"), 2).mu;
  CHECK(diag <= -Rational(mu[0] + mu[1]).get_d() * 0.95);
  CHECK_THROWS_AS(fit_decay({{1.0}, {1.0, 2.0}}, ev("-1/2")), DomainError);
}

TEST_CASE("least squares slope") {
  CHECK(lsq_slope({0, 1, 2, 3}, {1, 3, 5, 7}) == doctest::Approx(2.0));
  CHECK(linspace(1, 2, 3) == std::vector<double>{1.0, 1.5, 2.0});
}

TEST_CASE("growth bound along chamber rays") {
  const auto t = linspace(1.0, 6.0, 11);
  const auto rep = check_growth_bound(ev("-1,-2"), 2, standard_rays(2, t), 0.05);
  CHECK(rep.bound == ev("-2,-1"));
  REQUIRE(rep.rays.size() == 2);
  for (const auto& r : rep.rays) {
    CHECK(r.bounded);
    CHECK(r.non_increasing_trend);
  }
  CHECK(rep.pass());
  // A weaker bound must pass as well.
  CHECK(check_growth_bound(ev("-1,-2"), 2, standard_rays(2, t), 0.5).pass());

  const auto one = check_growth_bound(ev("-1/2"), 2, {RaySpec{{1.0, 0.0}, t}}, 0.05);
  CHECK(one.bound == ev("-1/2,0"));
  CHECK(one.pass());

  CHECK_THROWS_AS(check_growth_bound(ev("-1/2"), 2, {RaySpec{{1.0, 0.0}, t}}, 1.0), DomainError);
  CHECK_THROWS_AS(check_growth_bound(ev("-1/2"), 2, {RaySpec{{0.0, 1.0}, t}}, 0.05), DomainError);
}

TEST_CASE("standard rays are the chamber edges") {
  const auto rays = standard_rays(3, {1.0, 2.0});
  REQUIRE(rays.size() == 3);
  CHECK(rays[0].direction == std::vector<double>{1, 0, 0});
  CHECK(rays[1].direction == std::vector<double>{1, 1, 0});
  CHECK(rays[2].direction == std::vector<double>{1, 1, 1});
  CHECK(rays[2].point(2.0)[2] == doctest::Approx(std::exp(2.0)));
}
