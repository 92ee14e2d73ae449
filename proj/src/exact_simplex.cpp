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

#include "exact_simplex.hpp"

#include <algorithm>
#include <cstddef>

#include "thetaq/error.hpp"

namespace thetaq::detail {

namespace {

// Tableau rows hold [coefficients | rhs]; `basis[r]` is the basic column of row r.
struct Tableau {
  std::vector<std::vector<Rational>> rows;
  std::vector<std::size_t> basis;
  std::size_t width = 0;  // structural plus artificial columns

  void pivot(std::size_t r, std::size_t col) {
    auto& pr = rows[r];
    const Rational piv = pr[col];
    for (auto& v : pr) v /= piv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j <= width; ++j) {
        if (pr[j] != 0) rows[i][j] -= f * pr[j];
      }
    }
    basis[r] = col;
  }

  // Reduced cost of column j under objective `obj` (length width).
  Rational reduced(const std::vector<Rational>& obj, std::size_t j) const {
    Rational z = obj[j];
    for (std::size_t r = 0; r < rows.size(); ++r) z -= obj[basis[r]] * rows[r][j];
    return z;
  }

  // Runs primal simplex over the columns with allowed[j]; Bland's rule.
  void optimize(const std::vector<Rational>& obj, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = width;
      for (std::size_t j = 0; j < width; ++j) {
        if (allowed[j] && reduced(obj, j) > 0) {
          enter = j;
          break;
        }
      }
      if (enter == width) return;
      std::size_t leave = rows.size();
      Rational best;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][enter] <= 0) continue;
        Rational ratio = rows[r][width] / rows[r][enter];
        if (leave == rows.size() || ratio < best || (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows.size()) throw Error("linear program is unbounded");
      pivot(leave, enter);
    }
  }
};

}  // namespace

std::optional<LpSolution> maximize(const std::vector<std::vector<Rational>>& A, const std::vector<Rational>& b,
                                   const std::vector<Rational>& c) {
  const std::size_t m = A.size();
  const std::size_t nv = c.size();
  Tableau t;
  t.width = nv + m;
  t.rows.assign(m, std::vector<Rational>(t.width + 1, Rational(0)));
  t.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t j = 0; j < nv; ++j) t.rows[r][j] = flip ? Rational(-A[r][j]) : A[r][j];
    t.rows[r][nv + r] = 1;
    t.rows[r][t.width] = flip ? Rational(-b[r]) : b[r];
    t.basis[r] = nv + r;
  }

  // Phase one: drive the artificial columns to zero.
  std::vector<Rational> phase1(t.width, Rational(0));
  for (std::size_t j = nv; j < t.width; ++j) phase1[j] = -1;
  t.optimize(phase1, std::vector<bool>(t.width, true));
  Rational infeasibility = 0;
  for (std::size_t r = 0; r < m; ++r) {
    if (t.basis[r] >= nv) infeasibility += t.rows[r][t.width];
  }
  if (infeasibility != 0) return std::nullopt;

  // Pivot zero-level artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < t.rows.size();) {
    if (t.basis[r] < nv) {
      ++r;
      continue;
    }
    std::size_t col = nv;
    for (std::size_t j = 0; j < nv; ++j) {
      if (t.rows[r][j] != 0) {
        col = j;
        break;
      }
    }
    if (col == nv) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
      continue;
    }
    t.pivot(r, col);
    ++r;
  }

  std::vector<Rational> obj(t.width, Rational(0));
  std::copy(c.begin(), c.end(), obj.begin());
  std::vector<bool> allowed(t.width, false);
  std::fill(allowed.begin(), allowed.begin() + static_cast<std::ptrdiff_t>(nv), true);
  t.optimize(obj, allowed);

  LpSolution sol;
  sol.x.assign(nv, Rational(0));
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (t.basis[r] < nv) sol.x[t.basis[r]] = t.rows[r][t.width];
  }
  sol.objective = 0;
  for (std::size_t j = 0; j < nv; ++j) sol.objective += c[j] * sol.x[j];
  return sol;
}

}  // namespace thetaq::detail
