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

#include "thetaq/lpn.hpp"

#include <algorithm>

#include "thetaq/error.hpp"

namespace thetaq {

std::vector<Rational> EtaAssignment::row_sums() const {
  std::vector<Rational> mu(rows, Rational(0));
  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t i = 0; i < cols; ++i) mu[k] += at(k, i);
  }
  return mu;
}

BreakpointSequence breakpoints(const ExponentVector& lambda) {
  if (!strictly_dominated(lambda)) {
    throw DomainError("lambda-strictly-negative", "lambda " + to_string(lambda) + " is not < 0 in the prefix-sum order");
  }
  const auto sums = lambda.prefix_sums();
  const std::size_t p = sums.size();
  BreakpointSequence out;
  std::size_t start = 0;
  while (start < p) {
    // Budget at j is -sums[j]; keep the last index attaining the minimum.
    std::size_t best = start;
    for (std::size_t j = start + 1; j < p; ++j) {
      if (-sums[j] <= -sums[best]) best = j;
    }
    out.ends.push_back(best + 1);
    out.budgets.push_back(-sums[best]);
    start = best + 1;
  }
  return out;
}

EtaAssignment greedy_eta(const ExponentVector& lambda, std::size_t n) {
  if (n == 0) throw DomainError("dimension", "n must be at least 1");
  EtaAssignment w;
  w.rows = n;
  w.cols = lambda.size();
  w.eta.assign(w.rows * w.cols, Rational(0));
  w.blocks = breakpoints(lambda);

  Rational assigned = 0;
  const Rational rows(static_cast<long>(n));
  for (std::size_t s = 0; s < w.blocks.block_count(); ++s) {
    const std::size_t lo = w.blocks.block_begin(s);
    const std::size_t hi = w.blocks.ends[s];
    const Rational width(static_cast<long>(hi - lo));
    const Rational remaining = w.blocks.budgets[s] - assigned;

    if (rows * width < remaining) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = lo; i < hi; ++i) w.at(k, i) = 1;
      }
      assigned += rows * width;
      w.cases.push_back(BlockCase::Saturated);
      continue;
    }

    Rational left = remaining;
    for (std::size_t k = 0; k < n && left > 0; ++k) {
      Rational row_share = std::min(width, left);
      left -= row_share;
      for (std::size_t i = lo; i < hi && row_share > 0; ++i) {
        const Rational cell = std::min(Rational(1), row_share);
        w.at(k, i) = cell;
        row_share -= cell;
      }
    }
    assigned = w.blocks.budgets[s];
    w.cases.push_back(BlockCase::Equality);
  }
  return w;
}

LpnResult lpn(const ExponentVector& lambda, std::size_t n) {
  EtaAssignment witness = greedy_eta(lambda, n);
  std::vector<Rational> mu = witness.row_sums();
  std::vector<Rational> neg(mu.size());
  std::transform(mu.begin(), mu.end(), neg.begin(), [](const Rational& x) { return Rational(-x); });
  return LpnResult{std::move(mu), ExponentVector(std::move(neg)), std::move(witness)};
}

std::optional<std::string> witness_violation(const EtaAssignment& w, const ExponentVector& lambda) {
  const std::size_t p = lambda.size();
  if (w.cols != p) return "column count differs from dim(lambda)";
  if (w.rows == 0) return "no rows";
  if (w.eta.size() != w.rows * w.cols) return "matrix storage size mismatch";
  for (const auto& x : w.eta) {
    if (x < 0 || x > 1) return "entry " + to_string(x) + " outside [0,1]";
  }

  // Blocks recomputed from the definition: j is a breakpoint iff its budget
  // is strictly below every later budget.
  Rational running = 0;
  std::vector<Rational> budget(p);
  for (std::size_t j = 0; j < p; ++j) budget[j] = (running -= lambda[j]);
  std::vector<std::size_t> expected;
  for (std::size_t j = 0; j < p; ++j) {
    bool last_min = true;
    for (std::size_t l = j + 1; l < p; ++l) last_min = last_min && budget[j] < budget[l];
    if (last_min) expected.push_back(j + 1);
  }
  if (w.blocks.ends != expected) return "breakpoint indices differ from the definition";
  if (w.cases.size() != expected.size()) return "one case label per block is required";

  Rational cumulative = 0;
  std::size_t lo = 0;
  for (std::size_t s = 0; s < expected.size(); ++s) {
    const std::size_t hi = expected[s];
    bool all_ones = true;
    for (std::size_t k = 0; k < w.rows; ++k) {
      for (std::size_t i = lo; i < hi; ++i) {
        cumulative += w.at(k, i);
        all_ones = all_ones && w.at(k, i) == 1;
      }
    }
    const Rational& b = budget[hi - 1];
    if (w.blocks.budgets.size() != expected.size() || w.blocks.budgets[s] != b) return "budget mismatch at block " + std::to_string(s + 1);
    const bool eq = cumulative == b;
    const bool sat = all_ones && cumulative < b;
    if (w.cases[s] == BlockCase::Equality && !eq) return "block " + std::to_string(s + 1) + " labelled equality but cumulative mass differs";
    if (w.cases[s] == BlockCase::Saturated && !sat) return "block " + std::to_string(s + 1) + " labelled saturated but not all ones under budget";
    lo = hi;
  }

  const auto mu = w.row_sums();
  for (std::size_t k = 1; k < mu.size(); ++k) {
    if (mu[k] > mu[k - 1]) return "row sums not non-increasing at row " + std::to_string(k + 1);
  }
  return std::nullopt;
}

}  // namespace thetaq
