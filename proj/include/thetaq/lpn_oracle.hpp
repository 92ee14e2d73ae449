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

#include "thetaq/exponent_vector.hpp"

namespace thetaq {

/// Largest problem the oracle accepts, in eta cells (p * n).
inline constexpr std::size_t kOracleMaxCells = 16;

/// Brute-force reference for L(p,n), independent of the greedy fill.
///
/// For every labelling of the breakpoints as equality or saturated blocks it
/// solves a chain of exact linear programs: maximize mu_1, fix it, maximize
/// mu_2, and so on. The lexicographically greatest mu over all feasible
/// labellings is returned as -mu. Throws DomainError when lambda is not < 0
/// or p * n exceeds kOracleMaxCells.
ExponentVector lpn_oracle(const ExponentVector& lambda, std::size_t n);

}  // namespace thetaq
