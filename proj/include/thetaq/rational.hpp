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

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace thetaq {

/// Exact rational scalar. Every exponent in the library is one of these;
/// floating point only appears in the quadrature modules.
using Rational = mpq_class;

/// Parses "a/b" or an integer, surrounding whitespace allowed. Decimal
/// notation is rejected so exact fields never pass through a float.
Rational parse_rational(std::string_view text);

/// Comma-separated list of rationals. An empty string yields an empty list.
std::vector<Rational> parse_rational_csv(std::string_view text);

/// Lowest-terms text form: "-3/2", "4", "0".
std::string to_string(const Rational& r);

Rational abs(const Rational& r);
Rational floor(const Rational& r);

inline Rational half(long numerator) {
  Rational r(numerator, 2);
  r.canonicalize();
  return r;
}

}  // namespace thetaq
