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
#include <vector>

#include "thetaq/rational.hpp"

namespace thetaq {

/// One instantiated condition: the symbolic inequality, both sides as
/// evaluated numbers, and whether it holds.
struct StepRecord {
  std::string id;
  std::string inequality;
  std::string lhs;
  std::string rhs;
  bool ok = false;

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

/// Outcome of a validation. The verdict is the conjunction of the steps.
struct ValidationReport {
  std::vector<StepRecord> steps;
  std::vector<std::vector<Rational>> bounds;  // propagated exponent bounds, in order
  std::vector<Rational> infchar;
  std::optional<bool> conjectural;

  bool verdict() const;
  /// First failing step, if any.
  const StepRecord* first_failure() const;
  const StepRecord* find(const std::string& id) const;

  StepRecord& add(std::string id, std::string inequality, const Rational& lhs, const Rational& rhs, bool ok);

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Canonical JSON: sorted keys, lowest-terms rational strings, two-space
/// indentation, trailing newline. Identical reports give identical bytes.
std::string to_json(const ValidationReport& report);

/// Inverse of to_json; throws ParseError on malformed documents.
ValidationReport report_from_json(const std::string& text);

}  // namespace thetaq
