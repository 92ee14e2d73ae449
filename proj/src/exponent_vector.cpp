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

#include "thetaq/exponent_vector.hpp"

#include <algorithm>

#include "thetaq/error.hpp"

namespace thetaq {
namespace {

void require_same_size(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw DomainError("dimension", "vectors of length " + std::to_string(a.size()) + " and " +
                                       std::to_string(b.size()) + " cannot be combined");
  }
}

}  // namespace

ExponentVector::ExponentVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("dimension", "exponent vectors have dimension >= 1");
  for (auto& x : entries_) x.canonicalize();
}

ExponentVector::ExponentVector(std::initializer_list<Rational> entries)
    : ExponentVector(std::vector<Rational>(entries)) {}

ExponentVector ExponentVector::constant(const Rational& c, std::size_t dim) {
  return ExponentVector(std::vector<Rational>(dim, c));
}

std::vector<Rational> ExponentVector::prefix_sums() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  Rational running = 0;
  for (const auto& x : entries_) {
    running += x;
    out.push_back(running);
  }
  return out;
}

Rational ExponentVector::total() const {
  Rational s = 0;
  for (const auto& x : entries_) s += x;
  return s;
}

Rational ExponentVector::max_prefix_sum() const {
  const auto sums = prefix_sums();
  return *std::max_element(sums.begin(), sums.end());
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& rhs) {
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ExponentVector& ExponentVector::operator-=(const ExponentVector& rhs) {
  require_same_size(*this, rhs);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ExponentVector& ExponentVector::operator+=(const Rational& c) {
  for (auto& x : entries_) x += c;
  return *this;
}

ExponentVector& ExponentVector::operator-=(const Rational& c) {
  for (auto& x : entries_) x -= c;
  return *this;
}

ExponentVector ExponentVector::operator-() const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& x : entries_) out.push_back(-x);
  return ExponentVector(std::move(out));
}

bool strictly_dominated(const ExponentVector& x) {
  Rational running = 0;
  for (const auto& v : x) {
    running += v;
    if (running >= 0) return false;
  }
  return true;
}

bool weakly_dominated(const ExponentVector& x) {
  Rational running = 0;
  for (const auto& v : x) {
    running += v;
    if (running > 0) return false;
  }
  return true;
}

std::string to_string(const std::vector<Rational>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += to_string(xs[i]);
  }
  out += ')';
  return out;
}

std::string to_string(const ExponentVector& x) { return to_string(x.entries()); }

ExponentVector parse_exponent_vector(std::string_view csv) {
  auto first = csv.find_first_not_of(" \t");
  auto last = csv.find_last_not_of(" \t");
  if (first != std::string_view::npos && csv[first] == '(' && csv[last] == ')') {
    csv = csv.substr(first + 1, last - first - 1);
  }
  auto entries = parse_rational_csv(csv);
  if (entries.empty()) throw ParseError("empty vector");
  return ExponentVector(std::move(entries));
}

}  // namespace thetaq
