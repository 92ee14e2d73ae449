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

#include "thetaq/quantum_induction.hpp"

#include <algorithm>
#include <json.hpp>

#include "thetaq/error.hpp"
#include "thetaq/growth.hpp"

namespace thetaq {

// ---------------------------------------------------------------------------
// Range membership

Direction parse_direction(std::string_view text) {
  if (text == "o2sp") return Direction::OToSp;
  if (text == "sp2o") return Direction::SpToO;
  throw ParseError("direction must be o2sp or sp2o, got '" + std::string(text) + "'");
}

RangeTest parse_range_test(std::string_view text) {
  if (text == "semistable") return RangeTest::Semistable;
  if (text == "ss") return RangeTest::Ss;
  if (text == "odd") return RangeTest::Odd;
  throw ParseError("range test must be semistable, ss or odd, got '" + std::string(text) + "'");
}

RangeCheck range_check(RangeTest test, Direction dir, int p, int q, int n, const ExponentVector& lambda) {
  const auto o = GroupDescriptor::orthogonal(p, q);
  const auto sp = GroupDescriptor::symplectic(n);
  const std::size_t want = static_cast<std::size_t>(dir == Direction::OToSp ? p : n);
  if (lambda.size() != want) throw DomainError("dimension", "lambda must have length " + std::to_string(want));

  const Rational s = half(p + q);
  if (test == RangeTest::Odd && dir != Direction::OToSp) {
    throw DomainError("odd-direction", "the odd relaxation exists only for the O(p,q) -> Sp(2n) direction");
  }
  const ExponentVector r = dir == Direction::OToSp ? rho(o) : rho(sp);

  RangeCheck out{false, false, lambda, "", {}};
  switch (test) {
    case RangeTest::Semistable:
      out.strict = true;
      if (dir == Direction::OToSp) {
        out.shifted = lambda - Rational(n) + r + r;
        out.inequality = "lambda - n + 2 rho(O(p,q)) < 0";
      } else {
        out.shifted = lambda - s + r + r;
        out.inequality = "lambda - (p+q)/2 + 2 rho(Sp(2n)) < 0";
      }
      break;
    case RangeTest::Ss:
      if (dir == Direction::OToSp) {
        out.shifted = lambda - (Rational(n) - s) + r;
        out.inequality = "lambda - (n - (p+q)/2) + rho(O(p,q)) <= 0";
        if (p + q > 2 * n + 1) out.notes.push_back("side condition p+q <= 2n+1 fails");
      } else {
        out.shifted = lambda - (s - n - 1) + r;
        out.inequality = "lambda - ((p+q)/2 - n - 1) + rho(Sp(2n)) <= 0";
        if (!(n < p)) out.notes.push_back("side condition n < p <= q fails");
      }
      break;
    case RangeTest::Odd:
      out.shifted = lambda - (Rational(n) - half(p + q - 1)) + r;
      out.inequality = "lambda - (n - (p+q-1)/2) + rho(O(p,q)) <= 0";
      if ((p + q) % 2 == 0) out.notes.push_back("side condition p+q odd fails");
      if (p + q > 2 * n + 1) out.notes.push_back("side condition p+q <= 2n+1 fails");
      break;
  }
  out.holds = out.strict ? strictly_dominated(out.shifted) : weakly_dominated(out.shifted);
  return out;
}

bool in_semistable_O_to_Sp(const ExponentVector& lambda, int p, int q, int n) {
  return range_check(RangeTest::Semistable, Direction::OToSp, p, q, n, lambda).holds;
}
bool in_semistable_Sp_to_O(const ExponentVector& lambda, int n, int p, int q) {
  return range_check(RangeTest::Semistable, Direction::SpToO, p, q, n, lambda).holds;
}
bool in_ss_O_to_Sp(const ExponentVector& lambda, int p, int q, int n) {
  return range_check(RangeTest::Ss, Direction::OToSp, p, q, n, lambda).holds;
}
bool in_ss_Sp_to_O(const ExponentVector& lambda, int n, int p, int q) {
  return range_check(RangeTest::Ss, Direction::SpToO, p, q, n, lambda).holds;
}
bool in_odd_range(const ExponentVector& lambda, int p, int q, int n) {
  return range_check(RangeTest::Odd, Direction::OToSp, p, q, n, lambda).holds;
}

// ---------------------------------------------------------------------------
// One-step validation

ValidationReport validate_one_step_O(int p, int q, int n, int p2, int q2) {
  GroupDescriptor::orthogonal(p, q);
  GroupDescriptor::symplectic(n);
  GroupDescriptor::orthogonal(p2, q2);
  ValidationReport r;
  r.add("1:rank-order", "q' >= p'", q2, p2, q2 >= p2);
  r.add("1:rank-bound", "p' > n", p2, n, p2 > n);
  r.add("2:size-gap", "p'+q'-2n >= 2n-(p+q)+2", p2 + q2 - 2 * n, 2 * n - (p + q) + 2, p2 + q2 - 2 * n >= 2 * n - (p + q) + 2);
  r.add("2:size-positive", "2n-(p+q)+2 >= 1", 2 * n - (p + q) + 2, 1, 2 * n - (p + q) + 2 >= 1);
  r.add("3:parity", "(p+q) mod 2 = (p'+q') mod 2", (p + q) % 2, (p2 + q2) % 2, (p + q) % 2 == (p2 + q2) % 2);
  const Rational lhs = -half(p + q) + n + 1 + n - half(p2 + q2);
  r.add("4:propagation", "-(p+q)/2 + n + 1 + n - (p'+q')/2 <= 0", lhs, 0, lhs <= 0);
  r.bounds.push_back(ss_bound_O_to_Sp(p, q, n).entries());
  return r;
}

ValidationReport validate_one_step_Sp(int n, int p, int q, int n2) {
  GroupDescriptor::symplectic(n);
  GroupDescriptor::orthogonal(p, q);
  GroupDescriptor::symplectic(n2);
  ValidationReport r;
  r.add("1:size", "2n'-p-q >= p+q-2n-2", 2 * n2 - p - q, p + q - 2 * n - 2, 2 * n2 - p - q >= p + q - 2 * n - 2);
  r.add("2:rank-bound", "n < p", n, p, n < p);
  r.add("2:rank-order", "p <= q", p, q, p <= q);
  const long lhs = -n - n2 + p + q - 1;
  r.add("3:propagation", "-n - n' + p + q - 1 <= 0", lhs, 0, lhs <= 0);
  r.bounds.push_back(ss_bound_Sp_to_O(n, p, q).entries());
  return r;
}

// ---------------------------------------------------------------------------
// Chains

void DualPairChain::check_well_formed() const {
  if (groups.size() < 2) throw DomainError("chain", "a chain needs at least two groups");
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const bool orth_here = (start == StartKind::Orthogonal) == (i % 2 == 0);
    if (groups[i].is_orthogonal() != orth_here) {
      throw DomainError("chain", "group " + std::to_string(i + 1) + " breaks the alternation of kinds");
    }
  }
  if (initial_lambda.size() != static_cast<std::size_t>(groups.front().rank())) {
    throw DomainError("chain", "lambda must have length " + std::to_string(groups.front().rank()));
  }
}

namespace {

// Exponent bound after the theta step groups[i] -> groups[i+1].
ExponentVector step_bound(const GroupDescriptor& from, const GroupDescriptor& to) {
  if (from.is_orthogonal()) return ss_bound_O_to_Sp(from.p(), from.q(), to.n());
  return ss_bound_Sp_to_O(from.n(), to.p(), to.q());
}

// ss membership of `bound` (a bound on `from`) for the pair (from, to).
RangeCheck ss_check(const ExponentVector& bound, const GroupDescriptor& from, const GroupDescriptor& to) {
  if (from.is_orthogonal()) return range_check(RangeTest::Ss, Direction::OToSp, from.p(), from.q(), to.n(), bound);
  return range_check(RangeTest::Ss, Direction::SpToO, to.p(), to.q(), from.n(), bound);
}

void add_range_step(ValidationReport& r, std::string id, const std::string& pair, const RangeCheck& c) {
  std::string ineq = "max prefix sum of [" + c.inequality.substr(0, c.inequality.rfind(c.strict ? " <" : " <=")) + "] for " + pair + (c.strict ? " < 0" : " <= 0");
  r.add(std::move(id), std::move(ineq), c.shifted.max_prefix_sum(), 0, c.holds);
}

std::string pair_label(const GroupDescriptor& a, const GroupDescriptor& b) { return to_string(a) + " x " + to_string(b); }

}  // namespace

ValidationReport validate_chain(const DualPairChain& chain) {
  chain.check_well_formed();
  const auto& g = chain.groups;
  ValidationReport r;

  if (chain.start == StartKind::Orthogonal) {
    const int p1 = g[0].p(), q1 = g[0].q(), n1 = g[1].n();
    r.add("initial:size", "p1+q1 <= 2n1+1", p1 + q1, 2 * n1 + 1, p1 + q1 <= 2 * n1 + 1);
    add_range_step(r, "initial:range", pair_label(g[0], g[1]), ss_check(chain.initial_lambda, g[0], g[1]));
    // O_j = g[2j-2], n_j = g[2j-1].
    for (std::size_t j = 1; 2 * j < g.size(); ++j) {
      const int pj = g[2 * j - 2].p(), qj = g[2 * j - 2].q(), nj = g[2 * j - 1].n();
      const int pn = g[2 * j].p(), qn = g[2 * j].q();
      const std::string tag = "step" + std::to_string(j) + ":";
      r.add(tag + "rank", "n_j < p_{j+1}", nj, pn, nj < pn);
      r.add(tag + "order", "p_{j+1} <= q_{j+1}", pn, qn, pn <= qn);
      if (2 * j + 1 < g.size()) {
        const int nn = g[2 * j + 1].n();
        r.add(tag + "upper", "p_{j+1}+q_{j+1}-2n_j <= 2n_{j+1}-p_{j+1}-q_{j+1}+2", pn + qn - 2 * nj, 2 * nn - pn - qn + 2,
              pn + qn - 2 * nj <= 2 * nn - pn - qn + 2);
      }
      r.add(tag + "lower", "2n_j-p_j-q_j+2 <= p_{j+1}+q_{j+1}-2n_j", 2 * nj - pj - qj + 2, pn + qn - 2 * nj,
            2 * nj - pj - qj + 2 <= pn + qn - 2 * nj);
      r.add(tag + "parity", "(p_j+q_j) mod 2 = (p_{j+1}+q_{j+1}) mod 2", (pj + qj) % 2, (pn + qn) % 2, (pj + qj) % 2 == (pn + qn) % 2);
    }
  } else {
    const int n1 = g[0].n(), p1 = g[1].p(), q1 = g[1].q();
    r.add("initial:rank", "n1 < p1", n1, p1, n1 < p1);
    r.add("initial:order", "p1 <= q1", p1, q1, p1 <= q1);
    add_range_step(r, "initial:range", pair_label(g[0], g[1]), ss_check(chain.initial_lambda, g[0], g[1]));
    // n_j = g[2j-2], O_j = g[2j-1].
    for (std::size_t j = 1; 2 * j - 1 < g.size(); ++j) {
      const int nj = g[2 * j - 2].n(), pj = g[2 * j - 1].p(), qj = g[2 * j - 1].q();
      const std::string tag = "step" + std::to_string(j) + ":";
      if (j > 1) {
        r.add(tag + "rank", "n_j < p_j", nj, pj, nj < pj);
        r.add(tag + "order", "p_j <= q_j", pj, qj, pj <= qj);
      }
      if (2 * j < g.size()) {
        const int nn = g[2 * j].n();
        r.add(tag + "upper", "p_j+q_j-2n_j <= 2n_{j+1}-p_j-q_j+2", pj + qj - 2 * nj, 2 * nn - pj - qj + 2,
              pj + qj - 2 * nj <= 2 * nn - pj - qj + 2);
        if (2 * j + 1 < g.size()) {
          const int pn = g[2 * j + 1].p(), qn = g[2 * j + 1].q();
          r.add(tag + "lower", "2n_{j+1}-p_j-q_j+2 <= p_{j+1}+q_{j+1}-2n_{j+1}", 2 * nn - pj - qj + 2, pn + qn - 2 * nn,
                2 * nn - pj - qj + 2 <= pn + qn - 2 * nn);
          r.add(tag + "parity", "(p_j+q_j) mod 2 = (p_{j+1}+q_{j+1}) mod 2", (pj + qj) % 2, (pn + qn) % 2,
                (pj + qj) % 2 == (pn + qn) % 2);
        }
      }
    }
  }

  // Propagated bounds: the ss closed form after each theta step, checked
  // against the ss range of the following pair.
  r.bounds.push_back(chain.initial_lambda.entries());
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const ExponentVector b = step_bound(g[i], g[i + 1]);
    r.bounds.push_back(b.entries());
    if (i + 2 < g.size()) {
      add_range_step(r, "propagate" + std::to_string(i + 1) + ":ss", pair_label(g[i + 1], g[i + 2]), ss_check(b, g[i + 1], g[i + 2]));
    }
  }
  return r;
}

DualPairChain parse_chain_document(const std::string& json_text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("chain document is not valid JSON: ") + e.what());
  }
  try {
    const auto start = doc.at("start").get<std::string>();
    StartKind kind;
    if (start == "O") kind = StartKind::Orthogonal;
    else if (start == "Sp") kind = StartKind::Symplectic;
    else throw ParseError("start must be \"O\" or \"Sp\"");
    std::vector<GroupDescriptor> groups;
    for (const auto& gj : doc.at("groups")) {
      const auto k = gj.at("kind").get<std::string>();
      if (k == "O") groups.push_back(GroupDescriptor::orthogonal(gj.at("p").get<int>(), gj.at("q").get<int>()));
      else if (k == "Sp") groups.push_back(GroupDescriptor::symplectic(gj.at("n").get<int>()));
      else throw ParseError("group kind must be \"O\" or \"Sp\"");
    }
    std::vector<Rational> lambda;
    for (const auto& v : doc.at("lambda")) {
      if (!v.is_string()) throw ParseError("lambda entries must be rational strings such as \"-3/2\"");
      lambda.push_back(parse_rational(v.get<std::string>()));
    }
    if (lambda.empty()) throw ParseError("lambda must be non-empty");
    DualPairChain chain{kind, std::move(groups), ExponentVector(std::move(lambda))};
    chain.check_well_formed();
    return chain;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed chain document: ") + e.what());
  }
}

std::string chain_to_json(const DualPairChain& chain) {
  using nlohmann::json;
  json doc;
  doc["start"] = chain.start == StartKind::Orthogonal ? "O" : "Sp";
  json groups = json::array();
  for (const auto& g : chain.groups) {
    if (g.is_orthogonal()) groups.push_back({{"kind", "O"}, {"p", g.p()}, {"q", g.q()}});
    else groups.push_back({{"kind", "Sp"}, {"n", g.n()}});
  }
  doc["groups"] = std::move(groups);
  json lambda = json::array();
  for (const auto& x : chain.initial_lambda) lambda.push_back(to_string(x));
  doc["lambda"] = std::move(lambda);
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Infinitesimal characters

InfChar infchar_theta(Direction dir, int p, int q, int n, const InfChar& chi) {
  GroupDescriptor::orthogonal(p, q);
  GroupDescriptor::symplectic(n);
  const Rational s = half(p + q);
  const Rational fl((p + q) / 2);
  if (p + q < 2 * n) {
    if (dir != Direction::OToSp) throw DomainError("infchar-direction", "p+q < 2n+1 lifts from O(p,q) to Sp(2n); use o2sp");
    return chi + descending_string(Rational(n) - s, 1 + fl - s);
  }
  if (p + q > 2 * n + 1) {
    if (dir != Direction::SpToO) throw DomainError("infchar-direction", "p+q > 2n+1 lifts from Sp(2n) to O(p,q); use sp2o");
    return chi + descending_string(s - n - 1, s - fl);
  }
  return chi;
}

StepSizes StepSizes::o_start(int p, int q, int n, int p2, int q2) {
  GroupDescriptor::orthogonal(p, q);
  GroupDescriptor::symplectic(n);
  GroupDescriptor::orthogonal(p2, q2);
  StepSizes s{StartKind::Orthogonal};
  s.p = p;
  s.q = q;
  s.n = n;
  s.p2 = p2;
  s.q2 = q2;
  return s;
}

StepSizes StepSizes::sp_start(int n, int p, int q, int n2) {
  GroupDescriptor::symplectic(n);
  GroupDescriptor::orthogonal(p, q);
  GroupDescriptor::symplectic(n2);
  StepSizes s{StartKind::Symplectic};
  s.n = n;
  s.p = p;
  s.q = q;
  s.n2 = n2;
  return s;
}

StepSizes StepSizes::from_chain(const DualPairChain& chain) {
  chain.check_well_formed();
  const auto& g = chain.groups;
  if (g.size() != 3) throw DomainError("chain", "one quantum-induction step needs exactly three groups");
  if (chain.start == StartKind::Orthogonal) return o_start(g[0].p(), g[0].q(), g[1].n(), g[2].p(), g[2].q());
  return sp_start(g[0].n(), g[1].p(), g[1].q(), g[2].n());
}

InfCharResult infchar_Q(const StepSizes& s, const InfChar& chi) {
  InfCharResult out;
  const Rational sum = half(s.p + s.q);
  // Strings end at 1 and 0 for p+q even, at 1/2 for p+q odd.
  const bool even = (s.p + s.q) % 2 == 0;
  const Rational low_a = even ? Rational(1) : half(1);
  const Rational low_b = even ? Rational(0) : half(1);
  ValidationReport conditions;
  if (s.kind == StartKind::Orthogonal) {
    conditions = validate_one_step_O(s.p, s.q, s.n, s.p2, s.q2);
    out.value = chi + descending_string(Rational(s.n) - sum, low_a) + descending_string(half(s.p2 + s.q2) - s.n - 1, low_b);
  } else {
    conditions = validate_one_step_Sp(s.n, s.p, s.q, s.n2);
    out.value = chi + descending_string(sum - s.n - 1, low_b) + descending_string(Rational(s.n2) - sum, low_a);
  }
  for (const auto& st : conditions.steps) {
    if (!st.ok) out.warnings.push_back("condition " + st.id + " fails: " + st.inequality + " with " + st.lhs + " vs " + st.rhs);
  }
  return out;
}

std::string to_string(LimitCase c) {
  switch (c) {
    case LimitCase::I: return "I";
    case LimitCase::II: return "II";
    case LimitCase::III: return "III";
  }
  return "?";
}

std::vector<LimitCase> detect_limit_case(const StepSizes& s) {
  std::vector<LimitCase> out;
  if (s.kind == StartKind::Orthogonal) {
    if (s.p + s.q + s.p2 + s.q2 == 4 * s.n + 2) out.push_back(LimitCase::I);
    if (2 * s.n - s.p - s.q + 2 == s.p2 + s.q2 - 2 * s.n && s.p - s.p2 == s.q - s.q2) out.push_back(LimitCase::II);
  } else {
    if (s.n + s.n2 + 1 == s.p + s.q) out.push_back(LimitCase::III);
  }
  return out;
}

InfChar parabolic_infchar(const StepSizes& s, const InfChar& chi) {
  const auto cases = detect_limit_case(s);
  int m = 0;
  if (std::find(cases.begin(), cases.end(), LimitCase::II) != cases.end()) m = s.p2 - s.p;
  else if (std::find(cases.begin(), cases.end(), LimitCase::III) != cases.end()) m = s.n2 - s.n;
  else throw DomainError("limit-case", "neither limit case II nor III applies to these sizes");
  const Rational top = half(m - 1);
  return chi + descending_string(top, -top);
}

bool parabolic_infchar_match(const StepSizes& s, const InfChar& chi) {
  return parabolic_infchar(s, chi).equivalent(infchar_Q(s, chi).value);
}

// ---------------------------------------------------------------------------
// Associated varieties

Partition predict_associated_variety(const StepSizes& s, const Partition& d) {
  std::vector<int> ft;
  if (s.kind == StartKind::Orthogonal) {
    ft = {s.p2 + s.q2 - 2 * s.n, 2 * s.n - s.p - s.q};
  } else {
    ft = {2 * s.n2 - s.p - s.q, s.p + s.q - 2 * s.n};
  }
  const auto dt = d.transpose();
  ft.insert(ft.end(), dt.parts().begin(), dt.parts().end());
  for (std::size_t i = 0; i < ft.size(); ++i) {
    if (ft[i] < 0) throw DomainError("conjecture-shape", "sizes incompatible with conjecture shape: negative part");
    if (i > 0 && ft[i] > ft[i - 1]) throw DomainError("conjecture-shape", "sizes incompatible with conjecture shape: parts increase");
  }
  while (!ft.empty() && ft.back() == 0) ft.pop_back();
  return Partition(std::move(ft)).transpose();
}

}  // namespace thetaq
