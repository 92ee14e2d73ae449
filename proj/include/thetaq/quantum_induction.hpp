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
#include <string_view>
#include <vector>

#include "thetaq/exponent_vector.hpp"
#include "thetaq/group.hpp"
#include "thetaq/infchar.hpp"
#include "thetaq/partition.hpp"
#include "thetaq/report.hpp"

namespace thetaq {

// ---------------------------------------------------------------------------
// Range membership

enum class Direction { OToSp, SpToO };
enum class RangeTest { Semistable, Ss, Odd };

Direction parse_direction(std::string_view text);  // "o2sp" | "sp2o"
RangeTest parse_range_test(std::string_view text);  // "semistable" | "ss" | "odd"

/// An instantiated range test: the shifted vector whose prefix sums are
/// compared with zero, and the outcome.
struct RangeCheck {
  bool holds = false;
  bool strict = false;            // strict prefix order when true
  ExponentVector shifted;         // lambda plus the test's shift
  std::string inequality;         // symbolic form
  std::vector<std::string> notes; // side conditions that do not hold
};

/// Sizes are always given as (p, q, n) for O(p,q) and Sp(2n); lambda has
/// length p for the orthogonal-to-symplectic direction and n otherwise.
RangeCheck range_check(RangeTest test, Direction dir, int p, int q, int n, const ExponentVector& lambda);

/// lambda - n + 2 rho(O(p,q)) < 0.
bool in_semistable_O_to_Sp(const ExponentVector& lambda, int p, int q, int n);
/// lambda - (p+q)/2 + 2 rho(Sp(2n)) < 0.
bool in_semistable_Sp_to_O(const ExponentVector& lambda, int n, int p, int q);
/// lambda - (n - (p+q)/2) + rho(O(p,q)) <= 0.
bool in_ss_O_to_Sp(const ExponentVector& lambda, int p, int q, int n);
/// lambda - ((p+q)/2 - n - 1) + rho(Sp(2n)) <= 0.
bool in_ss_Sp_to_O(const ExponentVector& lambda, int n, int p, int q);
/// lambda - (n - (p+q-1)/2) + rho(O(p,q)) <= 0, the relaxed range for p+q odd.
bool in_odd_range(const ExponentVector& lambda, int p, int q, int n);

// ---------------------------------------------------------------------------
// One-step and chained validation

/// O(p,q) -> Sp(2n) -> O(p2,q2). Steps: "1:rank-order", "1:rank-bound",
/// "2:size-gap", "2:size-positive", "3:parity", "4:propagation".
ValidationReport validate_one_step_O(int p, int q, int n, int p2, int q2);

/// Sp(2n) -> O(p,q) -> Sp(2n2). Steps: "1:size", "2:rank-bound",
/// "2:rank-order", "3:propagation".
ValidationReport validate_one_step_Sp(int n, int p, int q, int n2);

enum class StartKind { Orthogonal, Symplectic };

/// Alternating groups starting with `start`, plus a bound on the real parts
/// of the leading exponents of the seed representation (length = rank of
/// the first group). Parity across the orthogonal members is a validation
/// step, not a construction invariant, so failing chains stay diagnosable.
struct DualPairChain {
  StartKind start;
  std::vector<GroupDescriptor> groups;
  ExponentVector initial_lambda;

  /// Throws DomainError("chain") unless kinds alternate from `start`, there
  /// are at least two groups and lambda has the first group's rank.
  void check_well_formed() const;
};

/// Initial and inductive conditions of a chain, plus the exponent bound
/// propagated across every theta step with an ss-membership check of each
/// intermediate bound against the next pair. Conditions that need a group
/// beyond the end of the chain are skipped.
ValidationReport validate_chain(const DualPairChain& chain);

/// Reads {"start": "O"|"Sp", "groups": [...], "lambda": ["-3/2", ...]}.
DualPairChain parse_chain_document(const std::string& json_text);
std::string chain_to_json(const DualPairChain& chain);

// ---------------------------------------------------------------------------
// Infinitesimal characters

/// Character of theta(p,q;2n)(pi) from that of pi. For p+q < 2n+1 the lift
/// goes to Sp(2n) and dir must be OToSp; for p+q > 2n+1 it goes to O(p,q)
/// and dir must be SpToO (DomainError "infchar-direction" otherwise). For
/// p+q in {2n, 2n+1} chi is returned unchanged in either direction.
InfChar infchar_theta(Direction dir, int p, int q, int n, const InfChar& chi);

/// Sizes of one quantum-induction step: (p,q,n,p2,q2) when starting from
/// O(p,q), (n,p,q,n2) when starting from Sp(2n).
struct StepSizes {
  StartKind kind;
  int p = 0, q = 0, n = 0;
  int p2 = 0, q2 = 0;  // orthogonal start
  int n2 = 0;          // symplectic start

  static StepSizes o_start(int p, int q, int n, int p2, int q2);
  static StepSizes sp_start(int n, int p, int q, int n2);
  /// Built from a three-group chain.
  static StepSizes from_chain(const DualPairChain& chain);
};

struct InfCharResult {
  InfChar value;
  std::vector<std::string> warnings;  // one-step conditions that fail
};

/// Closed-form character after one quantum-induction step, by parity of p+q
/// and starting group. Failed one-step conditions are reported as warnings.
InfCharResult infchar_Q(const StepSizes& s, const InfChar& chi);

enum class LimitCase { I, II, III };
std::string to_string(LimitCase c);

/// Every limit relation the sizes satisfy:
/// I: p+q+p2+q2 = 4n+2; II: 2n-p-q+2 = p2+q2-2n and p-p2 = q-q2 (orthogonal
/// start); III: n+n2+1 = p+q (symplectic start).
std::vector<LimitCase> detect_limit_case(const StepSizes& s);

/// Compares infchar_Q with the parabolically induced character
/// chi + ((m-1)/2, (m-3)/2, ..., -(m-1)/2), m = p2-p in case II and n2-n in
/// case III. Throws DomainError("limit-case") when neither case applies.
bool parabolic_infchar_match(const StepSizes& s, const InfChar& chi);

/// The parabolic side of the comparison above.
InfChar parabolic_infchar(const StepSizes& s, const InfChar& chi);

// ---------------------------------------------------------------------------
// Associated varieties (conjectural)

/// Predicted partition f with f^t = (p2+q2-2n, 2n-p-q, d^t) for an
/// orthogonal start, or (2n2-p-q, p+q-2n, d^t) for a symplectic start.
/// Throws DomainError("conjecture-shape") when that sequence is not a
/// partition (negative or increasing parts). Trailing zeros are dropped.
/// The prediction is conjectural; front ends must say so.
Partition predict_associated_variety(const StepSizes& s, const Partition& d);

}  // namespace thetaq
