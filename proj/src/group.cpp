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

#include "thetaq/group.hpp"

#include <charconv>

#include "thetaq/error.hpp"

namespace thetaq {
namespace {

int parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("bad integer in group spec '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

GroupDescriptor GroupDescriptor::orthogonal(int p, int q) {
  if (p < 1) throw DomainError("orthogonal-rank", "O(p,q) requires p >= 1, got p = " + std::to_string(p));
  if (p > q) {
    throw DomainError("orthogonal-order",
                      "O(p,q) requires p <= q, got O(" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  return GroupDescriptor(Kind::Orthogonal, p, q, 0);
}

GroupDescriptor GroupDescriptor::symplectic(int n) {
  if (n < 1) throw DomainError("symplectic-rank", "Sp(2n) requires n >= 1, got n = " + std::to_string(n));
  return GroupDescriptor(Kind::Symplectic, 0, 0, n);
}

int GroupDescriptor::p() const {
  if (!is_orthogonal()) throw DomainError("group-kind", "p is only defined for O(p,q)");
  return p_;
}

int GroupDescriptor::q() const {
  if (!is_orthogonal()) throw DomainError("group-kind", "q is only defined for O(p,q)");
  return q_;
}

int GroupDescriptor::n() const {
  if (!is_symplectic()) throw DomainError("group-kind", "n is only defined for Sp(2n)");
  return n_;
}

std::optional<int> GroupDescriptor::parity_class() const noexcept {
  if (!is_orthogonal()) return std::nullopt;
  return (p_ + q_) % 2;
}

std::string to_string(const GroupDescriptor& g) {
  if (g.is_orthogonal()) return "O(" + std::to_string(g.p()) + "," + std::to_string(g.q()) + ")";
  return "Sp(" + std::to_string(2 * g.n()) + ")";
}

GroupDescriptor parse_group(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("group spec must be O:p,q or Sp:n, got '" + std::string(spec) + "'");
  const auto head = spec.substr(0, colon);
  const auto body = spec.substr(colon + 1);
  if (head == "O") {
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw ParseError("orthogonal group spec is O:p,q");
    return GroupDescriptor::orthogonal(parse_int(body.substr(0, comma), spec), parse_int(body.substr(comma + 1), spec));
  }
  if (head == "Sp") return GroupDescriptor::symplectic(parse_int(body, spec));
  throw ParseError("unknown group kind '" + std::string(head) + "'");
}

ExponentVector rho(const GroupDescriptor& g) {
  std::vector<Rational> out;
  if (g.is_orthogonal()) {
    const int p = g.p();
    const int q = g.q();
    for (int i = 1; i <= p; ++i) out.emplace_back(p + q - 2 * i, 2);
  } else {
    for (int k = g.n(); k >= 1; --k) out.emplace_back(k);
  }
  for (auto& x : out) x.canonicalize();
  return ExponentVector(std::move(out));
}

CoverInfo cover_info(const GroupDescriptor& first, const GroupDescriptor& second, PairSide side) {
  if (first.kind() == second.kind()) {
    throw DomainError("dual-pair", to_string(first) + " and " + to_string(second) +
                                       " do not form an orthogonal-symplectic dual pair");
  }
  const GroupDescriptor& ortho = first.is_orthogonal() ? first : second;
  const GroupDescriptor& symp = first.is_symplectic() ? first : second;

  CoverInfo info;
  if (side == PairSide::Symplectic) {
    const bool even = (ortho.p() + ortho.q()) % 2 == 0;
    info.splits = even;
    info.product_with_center = even;
    info.genuine_required = !even;
  } else {
    const bool even = symp.n() % 2 == 0;
    info.splits = even;
    info.product_with_center = even;
    info.genuine_required = false;
  }
  return info;
}

}  // namespace thetaq
