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

// Command-line front end for the thetaq library.
//
// Exit codes: 0 success or positive verdict, 1 negative verdict on
// well-formed input, 2 malformed input or violated precondition.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "thetaq/error.hpp"
#include "thetaq/group.hpp"
#include "thetaq/growth.hpp"
#include "thetaq/lpn.hpp"
#include "thetaq/lpn_oracle.hpp"
#include "thetaq/oscillator.hpp"
#include "thetaq/quantum_induction.hpp"
#include "thetaq/report.hpp"
#include "thetaq/twisted_integral.hpp"

namespace {

using nlohmann::json;
using namespace thetaq;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kBadInput = 2;

// Twelve significant digits, shortest form.
std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Rounds to twelve significant digits so JSON numbers print that way.
double round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(fmt(x).c_str(), nullptr);
}

json rationals(const std::vector<Rational>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_string(x));
  return a;
}

json reals(const std::vector<double>& xs) {
  json a = json::array();
  for (double x : xs) a.push_back(round12(x));
  return a;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::vector<double> parse_real_csv(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto b = tok.find_first_not_of(" \t");
    const auto e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError(std::string("empty entry in ") + what);
    tok = tok.substr(b, e - b + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw ParseError(std::string("bad number '") + tok + "' in " + what);
    }
    if (used != tok.size() || !std::isfinite(v)) throw ParseError(std::string("bad number '") + tok + "' in " + what);
    out.push_back(v);
  }
  if (out.empty()) throw ParseError(std::string(what) + " must be non-empty");
  return out;
}

std::vector<int> parse_int_csv(const std::string& text, const char* what) {
  std::vector<int> out;
  for (double v : parse_real_csv(text, what)) {
    if (v != std::floor(v) || std::abs(v) > 1e6) throw ParseError(std::string(what) + " entries must be integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void require_length(const ExponentVector& v, std::size_t n, const char* what) {
  if (v.size() != n) throw DomainError("dimension", std::string(what) + " must have length " + std::to_string(n));
}

// ---------------------------------------------------------------------------

int cmd_rho(const std::string& group) {
  std::cout << to_string(rho(parse_group(group))) << "\n";
  return kOk;
}

int cmd_order(const std::string& rel, const std::string& x) {
  const auto v = parse_exponent_vector(x);
  bool holds;
  if (rel == "strict") holds = strictly_dominated(v);
  else if (rel == "weak") holds = weakly_dominated(v);
  else throw ParseError("--rel must be strict or weak");
  std::cout << (holds ? "true" : "false") << "\n";
  return holds ? kOk : kNegative;
}

int cmd_lpn(int p, int n, const std::string& lambda_csv, bool oracle, bool witness, bool as_json) {
  if (p < 1 || n < 1) throw DomainError("dimension", "p and n must be at least 1");
  const auto lambda = parse_exponent_vector(lambda_csv);
  require_length(lambda, static_cast<std::size_t>(p), "lambda");
  const auto res = lpn(lambda, static_cast<std::size_t>(n));
  std::optional<ExponentVector> ref;
  if (oracle) ref = lpn_oracle(lambda, static_cast<std::size_t>(n));
  const bool agree = !ref || *ref == res.output;

  if (as_json) {
    json doc;
    doc["p"] = p;
    doc["n"] = n;
    doc["lambda"] = rationals(lambda.entries());
    doc["output"] = rationals(res.output.entries());
    doc["mu"] = rationals(res.mu);
    if (ref) {
      doc["oracle"] = rationals(ref->entries());
      doc["oracle_agrees"] = agree;
    }
    if (witness) {
      json rows = json::array();
      for (std::size_t k = 0; k < res.witness.rows; ++k) {
        std::vector<Rational> row(res.witness.eta.begin() + static_cast<std::ptrdiff_t>(k * res.witness.cols),
                                  res.witness.eta.begin() + static_cast<std::ptrdiff_t>((k + 1) * res.witness.cols));
        rows.push_back(rationals(row));
      }
      json cases = json::array();
      for (auto c : res.witness.cases) cases.push_back(c == BlockCase::Equality ? "equality" : "saturated");
      doc["witness"] = {{"eta", rows}, {"breakpoints", res.witness.blocks.ends}, {"budgets", rationals(res.witness.blocks.budgets)}, {"cases", cases}};
    }
    emit(doc);
  } else {
    std::cout << to_string(res.output) << "\n";
    if (ref) std::cout << "oracle " << to_string(*ref) << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
    if (witness) {
      const auto& w = res.witness;
      std::cout << "breakpoints";
      for (std::size_t s = 0; s < w.blocks.block_count(); ++s) {
        std::cout << " j=" << w.blocks.ends[s] << " budget=" << to_string(w.blocks.budgets[s]) << " "
                  << (w.cases[s] == BlockCase::Equality ? "equality" : "saturated") << ";";
      }
      std::cout << "\n";
      for (std::size_t k = 0; k < w.rows; ++k) {
        std::cout << "eta row " << k + 1 << ":";
        for (std::size_t i = 0; i < w.cols; ++i) std::cout << " " << to_string(w.at(k, i));
        std::cout << "  | mu=" << to_string(res.mu[k]) << "\n";
      }
    }
  }
  return agree ? kOk : kNegative;
}

int cmd_bound(const std::string& dir_s, int p, int q, int n, const std::string& lambda_csv) {
  const auto dir = parse_direction(dir_s);
  const auto lambda = parse_exponent_vector(lambda_csv);
  const auto out = dir == Direction::OToSp ? bound_O_to_Sp(p, q, n, lambda) : bound_Sp_to_O(n, p, q, lambda);
  std::cout << to_string(out) << "\n";
  return kOk;
}

int cmd_range(const std::string& test_s, const std::string& dir_s, int p, int q, int n, const std::string& lambda_csv, bool as_json) {
  const auto c = range_check(parse_range_test(test_s), parse_direction(dir_s), p, q, n, parse_exponent_vector(lambda_csv));
  if (as_json) {
    emit({{"holds", c.holds},
          {"inequality", c.inequality},
          {"shifted", rationals(c.shifted.entries())},
          {"prefix_sums", rationals(c.shifted.prefix_sums())},
          {"notes", c.notes}});
  } else {
    std::cout << (c.holds ? "true" : "false") << "\n";
    std::cout << c.inequality << "\n";
    std::cout << "shifted " << to_string(c.shifted) << " prefix sums " << to_string(c.shifted.prefix_sums()) << "\n";
    for (const auto& note : c.notes) std::cout << "note: " << note << "\n";
  }
  return c.holds ? kOk : kNegative;
}

void print_report(const ValidationReport& r) {
  std::printf("%-22s %-6s %-10s %-10s %s\n", "step", "ok", "lhs", "rhs", "inequality");
  for (const auto& s : r.steps) {
    std::printf("%-22s %-6s %-10s %-10s %s\n", s.id.c_str(), s.ok ? "yes" : "NO", s.lhs.c_str(), s.rhs.c_str(), s.inequality.c_str());
  }
  for (std::size_t i = 0; i < r.bounds.size(); ++i) {
    std::cout << (i == 0 ? "initial bound " : "bound after step ") ;
    if (i > 0) std::cout << i << " ";
    std::cout << to_string(r.bounds[i]) << "\n";
  }
  if (!r.infchar.empty()) std::cout << "infchar " << to_string(r.infchar) << "\n";
  if (r.conjectural) std::cout << "CONJECTURAL\n";
  std::cout << "verdict " << (r.verdict() ? "pass" : "fail") << "\n";
}

int cmd_chain(const std::string& file, bool as_json) {
  const auto chain = parse_chain_document(read_file(file));
  const auto report = validate_chain(chain);
  if (as_json) std::cout << to_json(report);
  else print_report(report);
  return report.verdict() ? kOk : kNegative;
}

int cmd_infchar(const std::string& file, const std::string& chi_csv, bool as_json) {
  const auto chain = parse_chain_document(read_file(file));
  InfChar chi = parse_infchar(chi_csv);
  const auto& g = chain.groups;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const bool o_first = g[i].is_orthogonal();
    const auto& o = o_first ? g[i] : g[i + 1];
    const auto& sp = o_first ? g[i + 1] : g[i];
    chi = infchar_theta(o_first ? Direction::OToSp : Direction::SpToO, o.p(), o.q(), sp.n(), chi);
  }
  std::optional<InfCharResult> closed;
  if (g.size() == 3) closed = infchar_Q(StepSizes::from_chain(chain), parse_infchar(chi_csv));
  const bool agree = !closed || closed->value.equivalent(chi);
  if (as_json) {
    ValidationReport r = validate_chain(chain);
    r.infchar = chi.values();
    json doc = json::parse(to_json(r));
    doc["canonical"] = rationals(chi.canonical());
    if (closed) {
      doc["closed_form"] = rationals(closed->value.values());
      doc["closed_form_agrees"] = agree;
      doc["warnings"] = closed->warnings;
    }
    emit(doc);
  } else {
    std::cout << to_string(chi) << "\n";
    std::cout << "canonical " << to_string(chi.canonical()) << "\n";
    if (closed) {
      std::cout << "closed form " << to_string(closed->value) << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
      for (const auto& w : closed->warnings) std::cout << "warning: " << w << "\n";
    }
  }
  return agree ? kOk : kNegative;
}

int cmd_av(const std::string& file, const std::string& d_csv, bool as_json) {
  const auto chain = parse_chain_document(read_file(file));
  const auto sizes = StepSizes::from_chain(chain);
  const auto d = parse_partition(d_csv);
  const auto f = predict_associated_variety(sizes, d);
  if (as_json) {
    emit({{"conjectural", true}, {"d", d.parts()}, {"f", f.parts()}, {"f_transpose", f.transpose().parts()}});
  } else {
    std::cout << to_string(f) << "\n";
    std::cout << "f^t " << to_string(f.transpose()) << "\n";
    std::cout << "CONJECTURAL: prediction, not a theorem\n";
  }
  return kOk;
}

int cmd_oscillator(const std::string& a_csv, const std::string& alpha_csv, const std::string& beta_csv, bool check, bool as_json) {
  const auto a = parse_real_csv(a_csv, "--a");
  const auto alpha = parse_int_csv(alpha_csv, "--alpha");
  const auto beta = parse_int_csv(beta_csv, "--beta");
  const double coef = oscillator_coefficient(a, alpha, beta);
  const double bound = oscillator_bound(a);
  const double constant = oscillator_constant(alpha, beta);
  json doc{{"coefficient", round12(coef)}, {"bound", round12(bound)}, {"ratio", round12(coef / bound)}, {"constant", round12(constant)}};
  bool ok = std::abs(coef) / bound <= constant * (1 + 1e-12);
  if (check) {
    const auto q = oscillator_quadrature(a, alpha, beta);
    const double rel = coef == 0.0 ? std::abs(q.value) : std::abs(q.value - coef) / std::abs(coef);
    ok = ok && (coef == 0.0 ? std::abs(q.value) <= q.abs_error + 1e-300 : rel <= 1e-8);
    doc["quadrature"] = {{"value", round12(q.value)}, {"abs_error", round12(q.abs_error)}, {"rel_diff", round12(rel)}};
  }
  if (as_json) {
    emit(doc);
  } else {
    std::cout << "coefficient " << fmt(coef) << "\n";
    std::cout << "bound " << fmt(bound) << "  ratio " << fmt(coef / bound) << "  constant " << fmt(constant) << "\n";
    if (check) {
      std::cout << "quadrature " << fmt(doc["quadrature"]["value"].get<double>()) << " +- " << fmt(doc["quadrature"]["abs_error"].get<double>())
                << "  rel diff " << fmt(doc["quadrature"]["rel_diff"].get<double>()) << "\n";
    }
  }
  return ok ? kOk : kNegative;
}

int cmd_verify_integral(int p, int n, const std::string& lambda_csv, const std::string& ray_csv, double tmin, double tmax,
                        int samples, double delta, bool as_json) {
  const auto lambda = parse_exponent_vector(lambda_csv);
  require_length(lambda, static_cast<std::size_t>(p), "lambda");
  const auto dir = parse_real_csv(ray_csv, "--ray");
  if (dir.size() != static_cast<std::size_t>(n)) throw DomainError("dimension", "--ray must have length n");
  if (samples < 4) throw DomainError("samples", "--samples must be at least 4");
  if (!(tmax > tmin)) throw DomainError("samples", "--tmax must exceed --tmin");
  const RaySpec ray{dir, linspace(tmin, tmax, static_cast<std::size_t>(samples))};
  const auto rep = check_growth_bound(lambda, static_cast<std::size_t>(n), {ray}, delta);
  const auto& rr = rep.rays.front();
  std::vector<double> values;
  for (double t : ray.t_values) values.push_back(evaluate(ray.point(t), lambda).value);

  if (as_json) {
    emit({{"bound", rationals(rep.bound.entries())},
          {"delta", round12(delta)},
          {"direction", reals(rr.direction)},
          {"t", reals(rr.t_values)},
          {"values", reals(values)},
          {"ratios", reals(rr.ratios)},
          {"max_ratio", round12(rr.max_ratio)},
          {"trend_slope", round12(rr.trend_slope)},
          {"bounded", rr.bounded},
          {"non_increasing_trend", rr.non_increasing_trend},
          {"verdict", rep.pass() ? "pass" : "fail"}});
  } else {
    std::cout << "bound L(p,n)(lambda) = " << to_string(rep.bound) << ", delta = " << fmt(delta) << "\n";
    std::printf("%-14s %-20s %-20s\n", "t", "L(a(t),lambda)", "ratio");
    for (std::size_t i = 0; i < rr.t_values.size(); ++i) {
      std::printf("%-14s %-20s %-20s\n", fmt(rr.t_values[i]).c_str(), fmt(values[i]).c_str(), fmt(rr.ratios[i]).c_str());
    }
    std::cout << "max ratio " << fmt(rr.max_ratio) << ", late trend slope " << fmt(rr.trend_slope) << "\n";
    std::cout << "verdict " << (rep.pass() ? "pass" : "fail") << "\n";
  }
  return rep.pass() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth-exponent calculus for compositions of theta correspondences"};
  app.require_subcommand(1);
  bool as_json = false;

  std::string group;
  auto* rho_cmd = app.add_subcommand("rho", "Half sum of positive restricted roots");
  rho_cmd->add_option("--group", group, "O:p,q or Sp:n")->required();

  std::string rel, x;
  auto* order_cmd = app.add_subcommand("order", "Prefix-sum order test against zero");
  order_cmd->add_option("--rel", rel, "strict or weak")->required();
  order_cmd->add_option("--x", x, "CSV of rationals")->required();

  int p = 0, q = 0, n = 0;
  std::string lambda;
  bool oracle = false, witness = false;
  auto* lpn_cmd = app.add_subcommand("lpn", "Transfer map L(p,n)");
  lpn_cmd->add_option("--p", p)->required();
  lpn_cmd->add_option("--n", n)->required();
  lpn_cmd->add_option("--lambda", lambda, "CSV of rationals")->required();
  lpn_cmd->add_flag("--oracle", oracle, "Cross-check with the linear-programming oracle");
  lpn_cmd->add_flag("--witness", witness, "Print the eta assignment");
  lpn_cmd->add_flag("--json", as_json);

  std::string dir;
  auto* bound_cmd = app.add_subcommand("bound", "Exponent bound of a theta lift");
  bound_cmd->add_option("--dir", dir, "o2sp or sp2o")->required();
  bound_cmd->add_option("--p", p)->required();
  bound_cmd->add_option("--q", q)->required();
  bound_cmd->add_option("--n", n)->required();
  bound_cmd->add_option("--lambda", lambda)->required();

  std::string test;
  auto* range_cmd = app.add_subcommand("range", "Range membership test");
  range_cmd->add_option("--test", test, "semistable, ss or odd")->required();
  range_cmd->add_option("--dir", dir, "o2sp or sp2o")->required();
  range_cmd->add_option("--p", p)->required();
  range_cmd->add_option("--q", q)->required();
  range_cmd->add_option("--n", n)->required();
  range_cmd->add_option("--lambda", lambda)->required();
  range_cmd->add_flag("--json", as_json);

  std::string file;
  auto* chain_cmd = app.add_subcommand("chain", "Validate a dual-pair chain");
  chain_cmd->add_option("--file", file)->required();
  chain_cmd->add_flag("--json", as_json);

  std::string chi;
  auto* infchar_cmd = app.add_subcommand("infchar", "Propagate an infinitesimal character along a chain");
  infchar_cmd->add_option("--file", file)->required();
  infchar_cmd->add_option("--chi", chi, "CSV of rationals")->required();
  infchar_cmd->add_flag("--json", as_json);

  std::string d;
  auto* av_cmd = app.add_subcommand("av", "Conjectural associated variety after one step");
  av_cmd->add_option("--file", file)->required();
  av_cmd->add_option("--d", d, "partition as CSV; empty for the zero orbit")->required();
  av_cmd->add_flag("--json", as_json);

  std::string a, alpha, beta;
  bool check_quad = false;
  auto* osc_cmd = app.add_subcommand("oscillator", "Oscillator matrix coefficient on the torus");
  osc_cmd->add_option("--a", a)->required();
  osc_cmd->add_option("--alpha", alpha)->required();
  osc_cmd->add_option("--beta", beta)->required();
  osc_cmd->add_flag("--check-quadrature", check_quad);
  osc_cmd->add_flag("--json", as_json);

  std::string ray;
  double tmin = 1.0, tmax = 6.0, delta = 0.05;
  int samples = 11;
  auto* vi_cmd = app.add_subcommand("verify-integral", "Empirical weak-boundedness check along a ray");
  vi_cmd->add_option("--p", p)->required();
  vi_cmd->add_option("--n", n)->required();
  vi_cmd->add_option("--lambda", lambda)->required();
  vi_cmd->add_option("--ray", ray, "direction, CSV of reals")->required();
  vi_cmd->add_option("--tmin", tmin, "first sample (default 1)");
  vi_cmd->add_option("--tmax", tmax)->required();
  vi_cmd->add_option("--samples", samples)->required();
  vi_cmd->add_option("--delta", delta)->required();
  vi_cmd->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*rho_cmd) return cmd_rho(group);
    if (*order_cmd) return cmd_order(rel, x);
    if (*lpn_cmd) return cmd_lpn(p, n, lambda, oracle, witness, as_json);
    if (*bound_cmd) return cmd_bound(dir, p, q, n, lambda);
    if (*range_cmd) return cmd_range(test, dir, p, q, n, lambda, as_json);
    if (*chain_cmd) return cmd_chain(file, as_json);
    if (*infchar_cmd) return cmd_infchar(file, chi, as_json);
    if (*av_cmd) return cmd_av(file, d, as_json);
    if (*osc_cmd) return cmd_oscillator(a, alpha, beta, check_quad, as_json);
    if (*vi_cmd) return cmd_verify_integral(p, n, lambda, ray, tmin, tmax, samples, delta, as_json);
  } catch (const DomainError& e) {
    std::cerr << "error: precondition " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
