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

#include <optional>
#include <vector>

#include "thetaq/rational.hpp"

namespace thetaq::detail {

/// maximize c.x subject to A x = b, x >= 0, in exact arithmetic.
///
/// Dense two-phase tableau simplex with Bland's rule, so it terminates on
/// degenerate problems. Returns nothing when infeasible; throws when the
/// objective is unbounded.
struct LpSolution {
  Rational objective;
  std::vector<Rational> x;
};

std::optional<LpSolution> maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                                   const std::vector<Rational>& c);

}  // namespace thetaq::detail
