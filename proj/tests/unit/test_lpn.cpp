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

#include <random>

#include "helpers.hpp"
#include "thetaq/error.hpp"
#include "thetaq/lpn.hpp"
#include "thetaq/lpn_oracle.hpp"

using namespace thetaq;
using thetaq::test::ev;

namespace {

// (start, start+step, ...) of length len.
ExponentVector arith(Rational start, Rational step, std::size_t len) {
  std::vector<Rational> xs;
  for (std::size_t i = 0; i < len; ++i) xs.push_back(start + step * static_cast<long>(i));
  return ExponentVector(xs);
}

// Padded with zeros to length len.
ExponentVector padded(const ExponentVector& x, std::size_t len) {
  std::vector<Rational> xs(x.begin(), x.end());
  xs.resize(len, Rational(0));
  return ExponentVector(xs);
}

}  // namespace

TEST_CASE("breakpoint examples") {
  auto b = breakpoints(ev("-1,-2"));
  CHECK(b.ends == std::vector<std::size_t>{1, 2});
  CHECK(b.budgets == std::vector<Rational>{1, 3});

  b = breakpoints(ev("-3,1,-1"));
  CHECK(b.ends == std::vector<std::size_t>{2, 3});
  CHECK(b.budgets == std::vector<Rational>{2, 3});

  for (std::size_t p = 1; p <= 6; ++p) {
    b = breakpoints(arith(half(-1), -1, p));
    REQUIRE(b.ends.size() == p);
    for (std::size_t j = 1; j <= p; ++j) {
      CHECK(b.ends[j - 1] == j);
      CHECK(b.budgets[j - 1] == half(static_cast<long>(j * j)));
    }
  }
  CHECK_THROWS_AS(breakpoints(ev("0,-1")), DomainError);
}

TEST_CASE("breakpoint budgets increase and end at p") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-7, 5);
  int seen = 0;
  while (seen < 300) {
    std::vector<Rational> xs;
    for (int i = 0; i < 5; ++i) xs.push_back(half(num(rng)));
    const ExponentVector x(xs);
    if (!strictly_dominated(x)) continue;
    ++seen;
    const auto b = breakpoints(x);
    CHECK(b.ends.back() == 5);
    CHECK(b.budgets.front() > 0);
    for (std::size_t s = 1; s < b.ends.size(); ++s) {
      CHECK(b.ends[s] > b.ends[s - 1]);
      CHECK(b.budgets[s] > b.budgets[s - 1]);
    }
  }
}

TEST_CASE("greedy eta examples") {
  auto w = greedy_eta(ev("-2"), 1);
  CHECK(w.at(0, 0) == 1);
  CHECK(w.cases == std::vector<BlockCase>{BlockCase::Saturated});

  w = greedy_eta(ev("-1/2"), 2);
  CHECK(w.at(0, 0) == half(1));
  CHECK(w.at(1, 0) == 0);
  CHECK(w.cases == std::vector<BlockCase>{BlockCase::Equality});

  // Capacity equal to the budget is reported as equality.
  w = greedy_eta(ev("-2"), 2);
  CHECK(w.cases == std::vector<BlockCase>{BlockCase::Equality});

  for (std::size_t p = 1; p <= 5; ++p) {
    for (std::size_t n = p; n <= 6; ++n) {
      const auto mu = greedy_eta(arith(-1, -1, p), n).row_sums();
      for (std::size_t k = 0; k < n; ++k) CHECK(mu[k] == (k < p ? Rational(static_cast<long>(p - k)) : Rational(0)));
    }
  }
}

TEST_CASE("golden examples") {
  for (std::size_t p = 1; p <= 6; ++p) {
    for (std::size_t n = p; n <= 6; ++n) {
      CAPTURE(p);
      CAPTURE(n);
      // Half-integer and integer staircases through L(p,n).
      CHECK(lpn(arith(half(-1), -1, p), n).output == padded(arith(half(-2 * static_cast<long>(p) + 1), 1, p), n));
      CHECK(lpn(arith(-1, -1, p), n).output == padded(arith(-static_cast<long>(p), 1, p), n));
      // Same staircases through L(n,p).
      CHECK(lpn(arith(half(-1), -1, n), p).output == arith(half(-2 * static_cast<long>(n) + 1), 1, p));
      CHECK(lpn(arith(-1, -1, n), p).output == arith(-static_cast<long>(n), 1, p));
    }
  }
}

TEST_CASE("oracle examples") {
  CHECK(lpn_oracle(ev("-1,-2"), 2) == ev("-2,-1"));
  CHECK(lpn_oracle(ev("-1/2"), 1) == ev("-1/2"));
  CHECK(lpn_oracle(ev("-3"), 2) == ev("-1,-1"));
  CHECK_THROWS_AS(lpn_oracle(ev("-1,-1,-1,-1,-1"), 4), DomainError);
  CHECK_THROWS_AS(lpn_oracle(ev("1,-3"), 2), DomainError);
}

TEST_CASE("greedy output properties and oracle agreement on random inputs") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> num(-9, 5);
  std::uniform_int_distribution<int> dim(1, 4);
  int seen = 0;
  while (seen < 400) {
    const auto p = static_cast<std::size_t>(dim(rng));
    const auto n = static_cast<std::size_t>(dim(rng));
    std::vector<Rational> xs;
    for (std::size_t i = 0; i < p; ++i) xs.push_back(Rational(num(rng), 3));
    for (auto& x : xs) x.canonicalize();
    const ExponentVector lambda(xs);
    if (!strictly_dominated(lambda)) continue;
    ++seen;
    CAPTURE(to_string(lambda));
    CAPTURE(n);
    const auto r = lpn(lambda, n);

    // Monotone, bounded row sums.
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(r.mu[k] >= 0);
      CHECK(r.mu[k] <= static_cast<long>(p));
      if (k > 0) CHECK(r.mu[k - 1] >= r.mu[k]);
      CHECK(r.output[k] == -r.mu[k]);
    }

    // Budget bound, tight without saturated blocks.
    Rational total = 0;
    for (const auto& m : r.mu) total += m;
    CHECK(total <= -lambda.total());
    const bool saturated = std::find(r.witness.cases.begin(), r.witness.cases.end(), BlockCase::Saturated) != r.witness.cases.end();
    if (!saturated) CHECK(total == -lambda.total());

    // Range of the output.
    CHECK(weakly_dominated(r.output));
    if (r.mu[0] > 0) CHECK(strictly_dominated(r.output));

    const auto violation = witness_violation(r.witness, lambda);
    CHECK_MESSAGE(!violation, (violation ? *violation : ""));
    CHECK(r.witness.row_sums() == r.mu);

    CHECK(lpn_oracle(lambda, n) == r.output);
  }
}

TEST_CASE("witness checker rejects broken assignments") {
  const auto lambda = ev("-1,-2");
  auto w = lpn(lambda, 2).witness;
  CHECK_FALSE(witness_violation(w, lambda));
  auto bad = w;
  bad.at(0, 0) = Rational(3, 2);
  CHECK(witness_violation(bad, lambda));
  bad = w;
  bad.at(1, 1) = 0;
  CHECK(witness_violation(bad, lambda));
}

TEST_CASE("lpn rejects inputs outside the strict cone") {
  CHECK_THROWS_AS(lpn(ev("0"), 1), DomainError);
  CHECK_THROWS_AS(lpn(ev("-1,1"), 3), DomainError);
  try {
    lpn(ev("1"), 1);
  } catch (const DomainError& e) {
    CHECK(e.condition() == "lambda-strictly-negative");
  }
}
