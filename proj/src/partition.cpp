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

#include "thetaq/partition.hpp"

#include <charconv>
#include <numeric>

#include "thetaq/error.hpp"

namespace thetaq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition", "parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition", "parts must be non-increasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
  std::vector<int> cols(static_cast<std::size_t>(largest()), 0);
  // Column c has one cell for every row longer than c.
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int len = 0;
    while (static_cast<std::size_t>(len) < parts_.size() && parts_[static_cast<std::size_t>(len)] > static_cast<int>(c)) ++len;
    cols[c] = len;
  }
  return Partition(std::move(cols));
}

std::string to_string(const Partition& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d.parts()[i]);
  }
  return out + ")";
}

Partition parse_partition(std::string_view csv) {
  std::vector<int> parts;
  auto first = csv.find_first_not_of(" \t");
  if (first == std::string_view::npos) return Partition{};
  auto last = csv.find_last_not_of(" \t");
  csv = csv.substr(first, last - first + 1);
  if (csv.front() == '(' && csv.back() == ')') csv = csv.substr(1, csv.size() - 2);
  std::size_t start = 0;
  while (start <= csv.size() && !csv.empty()) {
    auto comma = csv.find(',', start);
    auto tok = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw ParseError("bad partition part '" + std::string(tok) + "'");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

}  // namespace thetaq
