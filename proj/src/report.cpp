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

#include "thetaq/report.hpp"

#include <algorithm>
#include <json.hpp>

#include "thetaq/error.hpp"

namespace thetaq {

using nlohmann::json;

bool ValidationReport::verdict() const {
  return std::all_of(steps.begin(), steps.end(), [](const StepRecord& s) { return s.ok; });
}

const StepRecord* ValidationReport::first_failure() const {
  for (const auto& s : steps) {
    if (!s.ok) return &s;
  }
  return nullptr;
}

const StepRecord* ValidationReport::find(const std::string& id) const {
  for (const auto& s : steps) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

StepRecord& ValidationReport::add(std::string id, std::string inequality, const Rational& lhs, const Rational& rhs, bool ok) {
  steps.push_back(StepRecord{std::move(id), std::move(inequality), to_string(lhs), to_string(rhs), ok});
  return steps.back();
}

namespace {

json rationals(const std::vector<Rational>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(to_string(x));
  return arr;
}

std::vector<Rational> parse_rationals(const json& arr) {
  if (!arr.is_array()) throw ParseError("expected an array of rational strings");
  std::vector<Rational> out;
  for (const auto& v : arr) {
    if (!v.is_string()) throw ParseError("rationals must be JSON strings");
    out.push_back(parse_rational(v.get<std::string>()));
  }
  return out;
}

}  // namespace

std::string to_json(const ValidationReport& report) {
  json doc;
  doc["verdict"] = report.verdict() ? "pass" : "fail";
  json steps = json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"id", s.id}, {"inequality", s.inequality}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"ok", s.ok}});
  }
  doc["steps"] = std::move(steps);
  json bounds = json::array();
  for (const auto& b : report.bounds) bounds.push_back(rationals(b));
  doc["bounds"] = std::move(bounds);
  doc["infchar"] = rationals(report.infchar);
  if (report.conjectural) doc["conjectural"] = *report.conjectural;
  return doc.dump(2) + "\n";
}

ValidationReport report_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("report must be a JSON object");
  ValidationReport r;
  try {
    for (const auto& s : doc.at("steps")) {
      r.steps.push_back(StepRecord{s.at("id").get<std::string>(), s.at("inequality").get<std::string>(),
                                   s.at("lhs").get<std::string>(), s.at("rhs").get<std::string>(), s.at("ok").get<bool>()});
    }
    for (const auto& b : doc.at("bounds")) r.bounds.push_back(parse_rationals(b));
    r.infchar = parse_rationals(doc.at("infchar"));
    if (doc.contains("conjectural")) r.conjectural = doc.at("conjectural").get<bool>();
    const auto verdict = doc.at("verdict").get<std::string>();
    if (verdict != (r.verdict() ? "pass" : "fail")) throw ParseError("verdict disagrees with the step records");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  return r;
}

}  // namespace thetaq
