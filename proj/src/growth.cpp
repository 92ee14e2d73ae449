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

#include "thetaq/growth.hpp"

#include "thetaq/error.hpp"
#include "thetaq/lpn.hpp"

namespace thetaq {

namespace {

void require_length(const ExponentVector& lambda, int expected, const char* what) {
  if (lambda.size() != static_cast<std::size_t>(expected)) {
    throw DomainError("dimension", std::string(what) + " must have length " + std::to_string(expected));
  }
}

Rational sum_half(int p, int q) { return half(p + q); }

}  // namespace

ExponentVector o_to_sp_argument(int p, int q, int n, const ExponentVector& lambda) {
  const auto o = GroupDescriptor::orthogonal(p, q);
  GroupDescriptor::symplectic(n);
  require_length(lambda, p, "lambda");
  const auto r = rho(o);
  return lambda + r + r - Rational(n);
}

ExponentVector sp_to_o_argument(int n, int p, int q, const ExponentVector& lambda) {
  GroupDescriptor::orthogonal(p, q);
  const auto sp = GroupDescriptor::symplectic(n);
  require_length(lambda, n, "lambda");
  const auto r = rho(sp);
  return lambda + r + r - sum_half(p, q);
}

ExponentVector bound_O_to_Sp(int p, int q, int n, const ExponentVector& lambda) {
  const auto arg = o_to_sp_argument(p, q, n, lambda);
  if (!strictly_dominated(arg)) {
    throw DomainError("semistable-range", "lambda + 2 rho(O(p,q)) - n = " + to_string(arg) + " is not < 0; not in the semistable range for this transfer");
  }
  return lpn(arg, static_cast<std::size_t>(n)).output - half(q - p);
}

ExponentVector bound_Sp_to_O(int n, int p, int q, const ExponentVector& lambda) {
  const auto arg = sp_to_o_argument(n, p, q, lambda);
  if (!strictly_dominated(arg)) {
    throw DomainError("semistable-range", "lambda + 2 rho(Sp(2n)) - (p+q)/2 = " + to_string(arg) + " is not < 0; not in the semistable range for this transfer");
  }
  return lpn(arg, static_cast<std::size_t>(p)).output;
}

ExponentVector ss_bound_O_to_Sp(int p, int q, int n) {
  GroupDescriptor::orthogonal(p, q);
  GroupDescriptor::symplectic(n);
  std::vector<Rational> out;
  for (int i = 0; i < std::min(p, n); ++i) out.push_back(-sum_half(p, q) + i);
  for (int i = p; i < n; ++i) out.push_back(-half(q - p));
  return ExponentVector(std::move(out));
}

ExponentVector ss_bound_Sp_to_O(int n, int p, int q) {
  GroupDescriptor::orthogonal(p, q);
  GroupDescriptor::symplectic(n);
  std::vector<Rational> out;
  for (int i = 0; i < p; ++i) out.emplace_back(i < n ? -n + i : 0);
  return ExponentVector(std::move(out));
}

ExponentVector odd_case_bound(int p, int q, int n) {
  GroupDescriptor::orthogonal(p, q);
  GroupDescriptor::symplectic(n);
  if ((p + q) % 2 == 0) throw DomainError("odd-parity", "p+q must be odd");
  if (p + q > 2 * n + 1) throw DomainError("odd-size", "p+q must be at most 2n+1");
  std::vector<Rational> out;
  for (int i = 0; i < p; ++i) out.push_back(-half(p + q - 1) + i);
  for (int i = p; i < n; ++i) out.push_back(-half(q - p));
  return ExponentVector(std::move(out));
}

ExponentVector ss_boundary_O(int p, int q, int n) {
  const auto o = GroupDescriptor::orthogonal(p, q);
  GroupDescriptor::symplectic(n);
  return ExponentVector::constant(Rational(n) - sum_half(p, q), static_cast<std::size_t>(p)) - rho(o);
}

ExponentVector ss_boundary_Sp(int n, int p, int q) {
  GroupDescriptor::orthogonal(p, q);
  const auto sp = GroupDescriptor::symplectic(n);
  return ExponentVector::constant(sum_half(p, q) - n - 1, static_cast<std::size_t>(n)) - rho(sp);
}

}  // namespace thetaq
