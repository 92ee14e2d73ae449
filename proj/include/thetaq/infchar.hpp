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

#include <string>
#include <string_view>
#include <vector>

#include "thetaq/rational.hpp"

namespace thetaq {

/// Infinitesimal character as a multiset of rationals.
///
/// Two characters are equal when their canonical forms agree: absolute
/// values sorted non-increasing. This is invariance under signed
/// permutations; the finer even-sign-change rule for type D is not applied.
class InfChar {
 public:
  InfChar() = default;
  explicit InfChar(std::vector<Rational> values) : values_(std::move(values)) {}

  /// Values in concatenation order, as produced.
  const std::vector<Rational>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::vector<Rational> canonical() const;

  /// Concatenation of multisets.
  InfChar operator+(const InfChar& rhs) const;

  bool equivalent(const InfChar& rhs) const { return canonical() == rhs.canonical(); }

 private:
  std::vector<Rational> values_;
};

/// start, start-1, start-2, ... down to the last value >= stop. Empty when
/// start < stop.
InfChar descending_string(const Rational& start, const Rational& stop);

std::string to_string(const InfChar& chi);
InfChar parse_infchar(std::string_view csv);

}  // namespace thetaq
