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

#include "thetaq/exponent_vector.hpp"

namespace thetaq::test {

inline ExponentVector ev(const std::string& csv) { return parse_exponent_vector(csv); }

inline Rational q(const std::string& text) { return parse_rational(text); }

}  // namespace thetaq::test
