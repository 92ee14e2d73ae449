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

namespace thetaq {

/// Integer partition: strictly positive, non-increasing parts. The empty
/// partition is allowed and labels the zero orbit.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const;  // sum of parts
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  /// Conjugate partition: column lengths of the Young diagram.
  Partition transpose() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline Partition transpose(const Partition& d) { return d.transpose(); }

std::string to_string(const Partition& d);
Partition parse_partition(std::string_view csv);

}  // namespace thetaq
