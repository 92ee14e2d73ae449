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

#include "thetaq/infchar.hpp"

#include <algorithm>

#include "thetaq/exponent_vector.hpp"

namespace thetaq {

std::vector<Rational> InfChar::canonical() const {
  std::vector<Rational> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(abs(v));
  std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return out;
}

InfChar InfChar::operator+(const InfChar& rhs) const {
  std::vector<Rational> out = values_;
  out.insert(out.end(), rhs.values_.begin(), rhs.values_.end());
  return InfChar(std::move(out));
}

InfChar descending_string(const Rational& start, const Rational& stop) {
  std::vector<Rational> out;
  for (Rational v = start; v >= stop; v -= 1) out.push_back(v);
  return InfChar(std::move(out));
}

std::string to_string(const InfChar& chi) { return to_string(chi.values()); }

InfChar parse_infchar(std::string_view csv) {
  auto first = csv.find_first_not_of(" \t");
  auto last = csv.find_last_not_of(" \t");
  if (first != std::string_view::npos && csv[first] == '(' && csv[last] == ')') {
    csv = csv.substr(first + 1, last - first - 1);
  }
  return InfChar(parse_rational_csv(csv));
}

}  // namespace thetaq
