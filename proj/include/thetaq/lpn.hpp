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
#include <optional>
#include <string>
#include <vector>

#include "thetaq/exponent_vector.hpp"

namespace thetaq {

/// Columns of lambda grouped into blocks (j_{s-1}, j_s] whose cumulative
/// budgets -(lambda_1 + ... + lambda_{j_s}) strictly increase.
///
/// `ends` holds the prefix lengths j_1 < j_2 < ... < j_m = p (one-based
/// counts, so block s covers columns ends[s-1] .. ends[s]-1 zero-based).
struct BreakpointSequence {
  std::vector<std::size_t> ends;
  std::vector<Rational> budgets;

  std::size_t block_count() const noexcept { return ends.size(); }
  std::size_t block_begin(std::size_t s) const noexcept { return s == 0 ? 0 : ends[s - 1]; }
  std::size_t block_width(std::size_t s) const noexcept { return ends[s] - block_begin(s); }
};

/// How a block meets its cumulative budget.
enum class BlockCase {
  Equality,   // cumulative eta mass equals the budget
  Saturated,  // every cell of the block is 1 and the budget is not reached
};

/// n x p matrix of weights in [0,1] certifying an L(p,n) value.
struct EtaAssignment {
  std::size_t rows = 0;  // n
  std::size_t cols = 0;  // p
  std::vector<Rational> eta;  // row-major
  BreakpointSequence blocks;
  std::vector<BlockCase> cases;  // one per block

  const Rational& at(std::size_t k, std::size_t i) const { return eta[k * cols + i]; }
  Rational& at(std::size_t k, std::size_t i) { return eta[k * cols + i]; }

  /// mu_k = eta_{k,1} + ... + eta_{k,p}.
  std::vector<Rational> row_sums() const;
};

struct LpnResult {
  std::vector<Rational> mu;  // length n, entries >= 0
  ExponentVector output;     // -mu
  EtaAssignment witness;
};

/// Greedy-minimizer blocks of lambda. Requires lambda < 0 (all prefix sums
/// negative); throws DomainError otherwise.
///
/// j_1 is the last index attaining the minimum budget over [1,p]; each later
/// j_{s+1} is the last index attaining the minimum over [j_s + 1, p].
BreakpointSequence breakpoints(const ExponentVector& lambda);

/// Row-major greedy fill of the eta matrix, block by block.
///
/// With remaining budget R_s for a block of width w_s: if n * w_s < R_s the
/// whole block is set to 1; otherwise rows 1, 2, ... each take
/// min(w_s, what is left) until the budget is met exactly. Columns inside a
/// row are filled left to right; only the row sums are canonical.
EtaAssignment greedy_eta(const ExponentVector& lambda, std::size_t n);

/// The transfer map L(p,n): C(p) -> C(n), returned as -mu.
LpnResult lpn(const ExponentVector& lambda, std::size_t n);

/// Checks an assignment against the definition, without reusing the
/// construction path: breakpoint structure, bounds on eta, one of the two
/// block cases at every breakpoint, and monotone row sums. Returns a
/// description of the first violation, or nothing when valid.
std::optional<std::string> witness_violation(const EtaAssignment& witness, const ExponentVector& lambda);

}  // namespace thetaq
