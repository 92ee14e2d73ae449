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
#include <string>
#include <string_view>

#include "thetaq/exponent_vector.hpp"

namespace thetaq {

/// O(p,q) with 1 <= p <= q, or Sp(2n,R) with n >= 1.
///
/// Orthogonal descriptors are not normalized: O(3,2) is rejected rather
/// than silently swapped, since p and q enter the exponent formulas
/// asymmetrically. The compact case p = 0 has no split torus and is rejected.
class GroupDescriptor {
 public:
  enum class Kind { Orthogonal, Symplectic };

  static GroupDescriptor orthogonal(int p, int q);
  static GroupDescriptor symplectic(int n);

  Kind kind() const noexcept { return kind_; }
  bool is_orthogonal() const noexcept { return kind_ == Kind::Orthogonal; }
  bool is_symplectic() const noexcept { return kind_ == Kind::Symplectic; }

  int p() const;
  int q() const;
  int n() const;

  /// Real rank: p for O(p,q), n for Sp(2n).
  int rank() const noexcept { return kind_ == Kind::Orthogonal ? p_ : n_; }

  /// (p+q) mod 2 for orthogonal groups; empty for symplectic ones.
  std::optional<int> parity_class() const noexcept;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

 private:
  GroupDescriptor(Kind kind, int p, int q, int n) : kind_(kind), p_(p), q_(q), n_(n) {}

  Kind kind_;
  int p_ = 0;
  int q_ = 0;
  int n_ = 0;
};

/// "O(2,3)" or "Sp(6)"; the symplectic label is the matrix size 2n.
std::string to_string(const GroupDescriptor& g);

/// Command-line form: "O:p,q" or "Sp:n".
GroupDescriptor parse_group(std::string_view spec);

/// Half sum of the positive restricted roots:
/// ((p+q-2)/2, (p+q-4)/2, ..., (q-p)/2) for O(p,q), (n, n-1, ..., 1) for Sp(2n).
ExponentVector rho(const GroupDescriptor& g);

/// Double-cover metadata of one member of an orthogonal-symplectic dual pair.
struct CoverInfo {
  bool splits = false;
  bool genuine_required = false;
  bool product_with_center = false;

  friend bool operator==(const CoverInfo&, const CoverInfo&) = default;
};

enum class PairSide { Orthogonal, Symplectic };

/// Cover metadata for `side` of the dual pair formed by `first` and
/// `second` (one orthogonal, one symplectic, either order).
///
/// Symplectic side: the cover splits iff p+q is even, and the correspondence
/// then only sees representations of Sp(2n) itself; for p+q odd it is the
/// metaplectic group and genuine representations are required.
/// Orthogonal side: MO(p,q) = {(xi, g) : xi^2 = det(g)^n}, a product with the
/// center {1, epsilon} iff n is even; its representations always descend to
/// O(p,q) after twisting by xi.
CoverInfo cover_info(const GroupDescriptor& first, const GroupDescriptor& second, PairSide side);

}  // namespace thetaq
