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

#include "thetaq/lpn_oracle.hpp"

#include <optional>

#include "exact_simplex.hpp"
#include "thetaq/error.hpp"

namespace thetaq {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Lexicographic maximum of the row sums with fixed mass per block, or
// nothing when the block masses cannot be realized.
//
// Columns 0..N-1 are eta (row-major), N..2N-1 the slacks of eta <= 1.
std::optional<std::vector<Rational>> lex_max_rows(std::size_t n, std::size_t p, const std::vector<std::size_t>& ends,
                                                  const std::vector<Rational>& mass) {
  const std::size_t cells = n * p;
  const std::size_t vars = 2 * cells;
  Matrix A;
  std::vector<Rational> b;
  for (std::size_t c = 0; c < cells; ++c) {
    std::vector<Rational> row(vars, Rational(0));
    row[c] = 1;
    row[cells + c] = 1;
    A.push_back(std::move(row));
    b.emplace_back(1);
  }
  std::size_t lo = 0;
  for (std::size_t s = 0; s < ends.size(); ++s) {
    std::vector<Rational> row(vars, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = lo; i < ends[s]; ++i) row[k * p + i] = 1;
    }
    A.push_back(std::move(row));
    b.push_back(mass[s]);
    lo = ends[s];
  }

  std::vector<Rational> mu;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> obj(vars, Rational(0));
    for (std::size_t i = 0; i < p; ++i) obj[k * p + i] = 1;
    auto sol = detail::maximize(A, b, obj);
    if (!sol) return std::nullopt;
    mu.push_back(sol->objective);
    // Freeze row k at its optimum before the next objective.
    A.push_back(obj);
    b.push_back(sol->objective);
  }
  return mu;
}

}  // namespace

ExponentVector lpn_oracle(const ExponentVector& lambda, std::size_t n) {
  const std::size_t p = lambda.size();
  if (n == 0) throw DomainError("dimension", "n must be at least 1");
  if (p * n > kOracleMaxCells) {
    throw DomainError("oracle-size", "p*n = " + std::to_string(p * n) + " exceeds " + std::to_string(kOracleMaxCells));
  }
  Rational running = 0;
  std::vector<Rational> budget(p);
  for (std::size_t j = 0; j < p; ++j) {
    running -= lambda[j];
    if (running <= 0) throw DomainError("lambda-strictly-negative", "lambda " + to_string(lambda) + " is not < 0");
    budget[j] = running;
  }
  // Breakpoints straight from the definition: budgets strictly below all later ones.
  std::vector<std::size_t> ends;
  for (std::size_t j = 0; j < p; ++j) {
    bool last_min = true;
    for (std::size_t l = j + 1; l < p; ++l) last_min = last_min && budget[j] < budget[l];
    if (last_min) ends.push_back(j + 1);
  }

  const std::size_t m = ends.size();
  const Rational rows(static_cast<long>(n));
  std::optional<std::vector<Rational>> best;
  for (unsigned long labels = 0; labels < (1UL << m); ++labels) {
    // Labels fix the cumulative mass: equality pins it to the budget, a
    // saturated block adds n * width. The saturated inequality is taken in
    // closed form; its boundary coincides with the equality label, so the
    // union over labels is unchanged.
    std::vector<Rational> mass;
    Rational cumulative = 0;
    bool feasible = true;
    std::size_t lo = 0;
    for (std::size_t s = 0; s < m && feasible; ++s) {
      const Rational capacity = rows * Rational(static_cast<long>(ends[s] - lo));
      const Rational& B = budget[ends[s] - 1];
      if (labels >> s & 1UL) {
        feasible = cumulative + capacity <= B;
        mass.push_back(capacity);
        cumulative += capacity;
      } else {
        const Rational need = B - cumulative;
        feasible = need >= 0 && need <= capacity;
        mass.push_back(need);
        cumulative = B;
      }
      lo = ends[s];
    }
    if (!feasible) continue;
    auto mu = lex_max_rows(n, p, ends, mass);
    if (mu && (!best || *best < *mu)) best = std::move(mu);
  }
  if (!best) throw Error("oracle found no feasible eta assignment");

  std::vector<Rational> out;
  for (const auto& x : *best) out.emplace_back(-x);
  return ExponentVector(std::move(out));
}

}  // namespace thetaq
