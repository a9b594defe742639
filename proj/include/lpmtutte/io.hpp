// Copyright 2026 The lpmtutte Authors.
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

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "lpmtutte/diagram.hpp"
#include "lpmtutte/error.hpp"
#include "lpmtutte/multifan.hpp"
#include "lpmtutte/polynomial.hpp"
#include "lpmtutte/snake.hpp"
#include "lpmtutte/verifier.hpp"

namespace lpm {

inline constexpr int kReportSchema = 1;

using ObjectSpec = std::variant<LpmDiagram, SnakeComposition, MultiFan>;

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto field = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (field.empty() || field.size() > 6 || field.find_first_not_of("0123456789") != std::string_view::npos) {
      throw Error(ErrorCode::parse_error, "bad " + std::string(what) + " entry '" + std::string(field) + "'");
    }
    out.push_back(std::stoi(std::string(field)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace detail

/// Accepts a diagram ("P:..;Q:.."), a snake ("S(2,3)"), a multi-fan
/// ("F(c=2,1;d=2)") or a family shorthand ("uniform:r,n" for U_{r,n},
/// "catalan:k").
inline ObjectSpec parse_object(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s.empty()) throw Error(ErrorCode::empty_input, "empty object specification");
  if (s.rfind("uniform:", 0) == 0) {
    auto v = detail::parse_int_list(std::string_view(s).substr(8), "uniform");
    if (v.size() != 2) throw Error(ErrorCode::parse_error, "expected 'uniform:r,n'");
    if (v[1] == 0) throw Error(ErrorCode::empty_input, "uniform matroid on no elements");
    if (v[0] > v[1]) throw Error(ErrorCode::parse_error, "uniform rank exceeds the element count", 1);
    return uniform_diagram(v[0], v[1] - v[0]);
  }
  if (s.rfind("catalan:", 0) == 0) {
    auto v = detail::parse_int_list(std::string_view(s).substr(8), "catalan");
    if (v.size() != 1 || v[0] < 1) throw Error(ErrorCode::parse_error, "expected 'catalan:k' with k >= 1");
    return catalan_diagram(v[0]);
  }
  if (s.rfind("s(", 0) == 0) return parse_snake(text);
  if (s.rfind("f(", 0) == 0) return parse_multifan(text);
  return parse_diagram(text);
}

/// "1,2,5" -> {1, 2, 5}; the empty string is the empty set.
inline std::vector<int> parse_subset(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) return {};
  return detail::parse_int_list(s, "subset");
}

inline std::string format_subset(const std::vector<int>& elements) {
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) out += (i ? "," : "") + std::to_string(elements[i]);
  return out;
}

inline nlohmann::json to_json(const BivariatePolynomial& p) {
  auto out = nlohmann::json::array();
  for (const auto& [i, j, c] : p.triples()) out.push_back({i, j, c});
  return out;
}

inline BivariatePolynomial polynomial_from_json(const nlohmann::json& j) {
  BivariatePolynomial out;
  for (const auto& t : j) out.add_term(t.at(0).get<int>(), t.at(1).get<int>(), BigInt(t.at(2).get<std::string>()));
  return out;
}

inline nlohmann::json to_json(const Error& e) {
  return {{"code", std::string(to_string(e.code()))}, {"position", e.position()}, {"message", e.what()}};
}

inline nlohmann::json to_json(const SnakeComposition& s, const MwMargin& margin) {
  return {{"schema", kReportSchema},
          {"snake", s.str()},
          {"lhs", margin.lhs.str()},
          {"rhs", margin.rhs.str()},
          {"satisfied_43", margin.satisfied_43},
          {"equality", margin.equality}};
}

inline nlohmann::json to_json(const MwReport& r) {
  return {{"diagram", r.id},          {"t20", r.t20.str()},
          {"t02", r.t02.str()},       {"bases", r.bases.str()},
          {"ratio", r.ratio().str()}, {"satisfies_mw", r.satisfies_mw},
          {"satisfies_43", r.satisfies_43}, {"equality_mw", r.equality_mw},
          {"is_trivial_snake_sum", r.is_trivial_snake_sum}, {"is_connected", r.is_connected},
          {"is_snake", r.is_snake}};
}

inline nlohmann::json to_json(const SweepSummary& s, bool include_reports) {
  auto witnesses = [](const std::vector<SweepWitness>& list) {
    auto out = nlohmann::json::array();
    for (const auto& w : list) out.push_back({{"diagram", w.id}, {"name", w.name}});
    return out;
  };
  nlohmann::json out = {{"schema", kReportSchema},
                        {"n_max", s.n_max},
                        {"checked", s.checked},
                        {"mw_violations", s.mw_violations},
                        {"violations_43", s.violations_43},
                        {"equality_mismatches", s.equality_mismatches},
                        {"equality_cases", witnesses(s.equality_cases)},
                        {"min_ratio", s.min_ratio ? s.min_ratio->str() : ""},
                        {"min_ratio_witnesses", witnesses(s.min_ratio_witnesses)},
                        {"min_ratio_nontrivial", s.min_ratio_nontrivial ? s.min_ratio_nontrivial->str() : ""},
                        {"min_ratio_nontrivial_witnesses", witnesses(s.min_ratio_nontrivial_witnesses)},
                        {"gluing_checked", s.gluing_checked},
                        {"gluing_failures", s.gluing_failures},
                        {"pivot_disconnected", s.pivot_disconnected},
                        {"ok", s.ok()}};
  if (include_reports) {
    auto reports = nlohmann::json::array();
    for (const auto& r : s.reports) reports.push_back(to_json(r));
    out["diagrams"] = std::move(reports);
  }
  return out;
}

inline std::string report_flags(const MwReport& r) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(r.satisfies_mw, "mw");
  add(r.satisfies_43, "43");
  add(r.equality_mw, "eq");
  add(r.is_trivial_snake_sum, "trivial_sum");
  add(r.is_connected, "connected");
  add(r.is_snake, "snake");
  return out.empty() ? "-" : out;
}

/// Tab-separated sweep report: a header, one line per diagram, then a
/// "# summary" block of key/value lines.
inline std::string sweep_report_text(const SweepSummary& s) {
  std::ostringstream os;
  os << "# lpmtutte sweep report schema " << kReportSchema << "\n";
  os << "# diagram\tt20\tt02\tbases\tflags\n";
  for (const auto& r : s.reports) {
    os << r.id << "\t" << r.t20 << "\t" << r.t02 << "\t" << r.bases << "\t" << report_flags(r) << "\n";
  }
  auto names = [](const std::vector<SweepWitness>& list) {
    std::string out;
    for (const auto& w : list) out += (out.empty() ? "" : " ") + w.name;
    return out.empty() ? std::string("-") : out;
  };
  os << "# summary\n";
  os << "n_max\t" << s.n_max << "\n";
  os << "checked\t" << s.checked << "\n";
  os << "mw_violations\t" << s.mw_violations << "\n";
  os << "violations_43\t" << s.violations_43 << "\n";
  os << "equality_mismatches\t" << s.equality_mismatches << "\n";
  os << "equality_cases\t" << names(s.equality_cases) << "\n";
  os << "min_ratio\t" << (s.min_ratio ? s.min_ratio->str() : "-") << "\t" << names(s.min_ratio_witnesses) << "\n";
  os << "min_ratio_nontrivial\t" << (s.min_ratio_nontrivial ? s.min_ratio_nontrivial->str() : "-") << "\t"
     << names(s.min_ratio_nontrivial_witnesses) << "\n";
  os << "gluing_checked\t" << s.gluing_checked << "\n";
  os << "gluing_failures\t" << s.gluing_failures << "\n";
  os << "pivot_disconnected\t" << s.pivot_disconnected << "\n";
  os << "status\t" << (s.ok() ? "ok" : "FAILED") << "\n";
  return os.str();
}

}  // namespace lpm
