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

#include "thetaq/exponent_vector.hpp"
#include "thetaq/group.hpp"

namespace thetaq {

/// Exponent transfer along the dual pair (O(p,q), Sp(2n)).
///
/// All sizes are validated through GroupDescriptor (1 <= p <= q, n >= 1).
/// Preconditions are exact rational tests; violations throw DomainError
/// with condition "semistable-range".

/// Input of L(p,n) for the orthogonal-to-symplectic transfer:
/// lambda + 2 rho(O(p,q)) - n.
ExponentVector o_to_sp_argument(int p, int q, int n, const ExponentVector& lambda);

/// Input of L(n,p) for the symplectic-to-orthogonal transfer:
/// lambda + 2 rho(Sp(2n)) - (p+q)/2.
ExponentVector sp_to_o_argument(int n, int p, int q, const ExponentVector& lambda);

/// L(p,n)(lambda + 2 rho(O(p,q)) - n) - (q-p)/2, a vector of length n.
ExponentVector bound_O_to_Sp(int p, int q, int n, const ExponentVector& lambda);

/// L(n,p)(lambda + 2 rho(Sp(2n)) - (p+q)/2), a vector of length p.
ExponentVector bound_Sp_to_O(int n, int p, int q, const ExponentVector& lambda);

/// Closed form of the transfer at the boundary of the ss range:
/// (-(p+q)/2, -(p+q)/2 + 1, ..., -(q-p+2)/2, then n-p copies of -(q-p)/2)
/// when n >= p, and the first n of those entries when n < p.
ExponentVector ss_bound_O_to_Sp(int p, int q, int n);

/// (-n, ..., -1, 0, ..., 0) of length p when p > n; (-n, ..., -n+p-1) when p <= n.
ExponentVector ss_bound_Sp_to_O(int n, int p, int q);

/// Odd case, p+q odd and p+q <= 2n+1:
/// (-(p+q-1)/2, ..., -(q-p+1)/2, then n-p copies of -(q-p)/2).
ExponentVector odd_case_bound(int p, int q, int n);

/// Boundary exponents of the ss ranges, where the ss tests hold with equality:
/// (n - (p+q)/2) - rho(O(p,q)) and ((p+q)/2 - n - 1) - rho(Sp(2n)).
ExponentVector ss_boundary_O(int p, int q, int n);
ExponentVector ss_boundary_Sp(int n, int p, int q);

}  // namespace thetaq
