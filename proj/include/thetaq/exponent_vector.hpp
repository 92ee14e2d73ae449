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
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "thetaq/rational.hpp"

namespace thetaq {

/// A point of a*: the real part of a leading exponent, or a growth exponent.
/// Dimension is fixed at construction and is at least one.
class ExponentVector {
 public:
  explicit ExponentVector(std::vector<Rational> entries);
  ExponentVector(std::initializer_list<Rational> entries);

  /// (c, c, ..., c) of length `dim`.
  static ExponentVector constant(const Rational& c, std::size_t dim);

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  /// s_k = x_1 + ... + x_k for k = 1..size().
  std::vector<Rational> prefix_sums() const;
  Rational total() const;
  Rational max_prefix_sum() const;

  ExponentVector& operator+=(const ExponentVector& rhs);
  ExponentVector& operator-=(const ExponentVector& rhs);
  /// Adds the same scalar to every entry.
  ExponentVector& operator+=(const Rational& c);
  ExponentVector& operator-=(const Rational& c);

  friend ExponentVector operator+(ExponentVector lhs, const ExponentVector& rhs) { return lhs += rhs; }
  friend ExponentVector operator-(ExponentVector lhs, const ExponentVector& rhs) { return lhs -= rhs; }
  friend ExponentVector operator+(ExponentVector lhs, const Rational& c) { return lhs += c; }
  friend ExponentVector operator-(ExponentVector lhs, const Rational& c) { return lhs -= c; }
  ExponentVector operator-() const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Rational> entries_;
};

inline ExponentVector constant_vector(const Rational& c, std::size_t dim) {
  return ExponentVector::constant(c, dim);
}

/// x < 0 in the partial-sum order: every prefix sum is strictly negative.
bool strictly_dominated(const ExponentVector& x);

/// x <= 0 in the partial-sum order: every prefix sum is nonpositive.
bool weakly_dominated(const ExponentVector& x);

/// "(a,b,c)" with lowest-terms rationals.
std::string to_string(const ExponentVector& x);
std::string to_string(const std::vector<Rational>& xs);

/// Accepts "a/b,c,d" or "(a/b,c,d)".
ExponentVector parse_exponent_vector(std::string_view csv);

}  // namespace thetaq
