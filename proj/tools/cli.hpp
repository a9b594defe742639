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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpmtutte/lpmtutte.hpp"

namespace lpm::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kCapExceeded = 2, kVerificationFailed = 3 };

struct Settings {
  std::string object;
  int n = 10;
  int workers = 1;
  int cap = 20;
  std::string format = "text";
  std::string out_path;
  std::string filter = "lc";
  std::string subset;
  bool has_subset = false;
};

namespace detail {

inline LpmDiagram as_diagram(const ObjectSpec& obj) {
  if (const auto* d = std::get_if<LpmDiagram>(&obj)) return *d;
  if (const auto* s = std::get_if<SnakeComposition>(&obj)) return snake_diagram(*s);
  throw Error(ErrorCode::parse_error, "expected a diagram or snake, got a multi-fan");
}

inline std::string object_name(const ObjectSpec& obj) {
  if (const auto* d = std::get_if<LpmDiagram>(&obj)) return describe(*d);
  if (const auto* s = std::get_if<SnakeComposition>(&obj)) return s->str();
  return std::get<MultiFan>(obj).str();
}

inline int cmd_eval(const Settings& st, std::ostream& out) {
  auto obj = parse_object(st.object);
  TutteOptions opts{st.cap};
  nlohmann::json j = {{"schema", kReportSchema}, {"object", object_name(obj)}};
  BigInt bases;
  BigInt t20;
  BigInt t02;
  if (const auto* f = std::get_if<MultiFan>(&obj)) {
    auto g = expand(*f);
    bases = spanning_trees(g).count;
    t20 = acyclic_formula(*f);
    t02 = totally_cyclic_bruteforce(g);
  } else {
    auto d = as_diagram(obj);
    j["diagram"] = d.canonical();
    bases = count_bases(d);
    auto values = key_evaluations(d, opts);
    t20 = values.t20;
    t02 = values.t02;
    if (st.has_subset) {
      auto subset = parse_subset(st.subset);
      j["subset"] = format_subset(subset);
      j["rank"] = rank(d, subset);
    }
  }
  j["bases"] = bases.str();
  j["t20"] = t20.str();
  j["t02"] = t02.str();
  const bool lc = t20 != 0 && t02 != 0;
  if (lc) {
    Fraction ratio(t20 * t02, bases * bases);
    j["mw_ratio"] = (t20 * t02).str() + "/" + (bases * bases).str();
    j["mw_ratio_reduced"] = ratio.str();
    j["satisfies_mw"] = t20 * t02 >= bases * bases;
    j["satisfies_43"] = 3 * t20 * t02 >= 4 * bases * bases;
  }
  if (st.format == "json") {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "object: " << j["object"].get<std::string>() << "\n";
  if (j.contains("diagram")) out << "diagram: " << j["diagram"].get<std::string>() << "\n";
  if (j.contains("rank")) out << "rank{" << j["subset"].get<std::string>() << "}=" << j["rank"].get<int>() << "\n";
  out << "bases=" << bases << "\n" << "t20=" << t20 << "\n" << "t02=" << t02 << "\n";
  if (lc) {
    out << "mw ratio " << j["mw_ratio"].get<std::string>() << " = " << j["mw_ratio_reduced"].get<std::string>()
        << "\n";
    out << "4/3 bound: " << 3 * t20 * t02 << " vs " << 4 * bases * bases
        << (j["satisfies_43"].get<bool>() ? " (holds)" : " (fails)") << "\n";
  } else {
    out << "mw: not applicable (loops or coloops present)\n";
  }
  return kOk;
}

inline int cmd_tutte(const Settings& st, std::ostream& out) {
  auto obj = parse_object(st.object);
  BivariatePolynomial p;
  if (const auto* f = std::get_if<MultiFan>(&obj)) {
    p = graph_tutte(expand(*f));
  } else {
    p = tutte_lpm(as_diagram(obj), TutteOptions{st.cap});
  }
  if (st.format == "json") {
    out << nlohmann::json{{"schema", kReportSchema}, {"object", object_name(obj)}, {"terms", to_json(p)}}.dump()
        << "\n";
  } else {
    out << p.str() << "\n";
  }
  return kOk;
}

inline int cmd_snake(const Settings& st, std::ostream& out) {
  auto obj = parse_object(st.object);
  SnakeComposition s = [&] {
    if (const auto* sp = std::get_if<SnakeComposition>(&obj)) return *sp;
    if (const auto* d = std::get_if<LpmDiagram>(&obj)) {
      if (auto rec = recognize_snake(*d)) return rec->composition;
      throw Error(ErrorCode::parse_error, "diagram " + d->canonical() + " is not a snake");
    }
    throw Error(ErrorCode::parse_error, "expected a snake or a snake diagram");
  }();
  TutteOptions opts{st.cap};
  auto margin = mw_margin(s);
  auto identity = product_identity_check(s, opts);
  auto fan = fan_from_snake(s);
  nlohmann::json j = to_json(s, margin);
  j["diagram"] = snake_diagram(s).canonical();
  j["elements"] = s.element_count();
  j["dual"] = snake_dual(s).str();
  j["bases_recursive"] = bases_recursive(s).str();
  j["bases_fib_sum"] = bases_fib_sum(s).str();
  j["bases_dp"] = count_bases(snake_diagram(s)).str();
  j["t20"] = eval20(s).str();
  j["t02"] = eval02(s).str();
  j["product_identity"] = identity.ok();
  j["product_identity_partial"] = identity.partial();
  j["multifan"] = fan.str();
  j["dual_multifan"] = fan_from_dual_snake(s).str();
  if (st.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    for (const char* key : {"snake", "diagram", "dual", "multifan", "dual_multifan", "bases_recursive",
                            "bases_fib_sum", "bases_dp", "t20", "t02", "lhs", "rhs"}) {
      out << key << ": " << j[key].get<std::string>() << "\n";
    }
    out << "elements: " << s.element_count() << "\n";
    out << "product identity: " << (identity.ok() ? "holds" : "FAILS")
        << (identity.partial() ? " (formula only, above cap)" : "") << "\n";
    out << "4/3 bound: " << (margin.satisfied_43 ? "holds" : "fails") << (margin.equality ? " with equality" : "")
        << "\n";
  }
  return identity.ok() ? kOk : kVerificationFailed;
}

inline int cmd_fan(const Settings& st, std::ostream& out) {
  auto obj = parse_object(st.object);
  MultiFan f = [&] {
    if (const auto* fp = std::get_if<MultiFan>(&obj)) return *fp;
    if (const auto* sp = std::get_if<SnakeComposition>(&obj)) return fan_from_snake(*sp);
    throw Error(ErrorCode::parse_error, "expected a multi-fan or a snake");
  }();
  auto g = expand(f);
  auto trees = spanning_trees(g);
  nlohmann::json j = {{"schema", kReportSchema},
                      {"multifan", f.str()},
                      {"vertices", g.vertex_count},
                      {"edges", g.edge_count()},
                      {"graph", g.str()},
                      {"spanning_trees", trees.count.str()},
                      {"acyclic_formula", acyclic_formula(f).str()}};
  OrientationOptions orient;
  try {
    j["acyclic_bruteforce"] = acyclic_bruteforce(g, orient).str();
    j["totally_cyclic"] = totally_cyclic_bruteforce(g, orient).str();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::cap_exceeded) throw;
  }
  try {
    j["tutte"] = graph_tutte(g).str();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::cap_exceeded) throw;
  }
  if (st.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "schema") continue;
      out << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
  }
  if (j.contains("acyclic_bruteforce") && j["acyclic_bruteforce"] != j["acyclic_formula"]) return kVerificationFailed;
  return kOk;
}

inline int write_output(const Settings& st, const std::string& text, std::ostream& out) {
  if (st.out_path.empty()) {
    out << text;
    return kOk;
  }
  std::ofstream file(st.out_path, std::ios::binary);
  if (!file) throw Error(ErrorCode::parse_error, "cannot open output file '" + st.out_path + "'");
  file << text;
  return kOk;
}

inline std::string names(const std::vector<SweepWitness>& list) {
  std::string out;
  for (const auto& w : list) out += (out.empty() ? "" : ", ") + w.name;
  return out.empty() ? "none" : out;
}

inline int cmd_verify(const Settings& st, std::ostream& out) {
  SweepOptions opts;
  opts.workers = st.workers;
  opts.keep_reports = false;
  opts.tutte.brute_force_cap = st.cap;
  auto summary = sweep(st.n, opts);
  long long violations = summary.mw_violations + summary.violations_43 + summary.equality_mismatches +
                         summary.gluing_failures + summary.pivot_disconnected;
  if (st.format == "json") {
    out << to_json(summary, false).dump(2) << "\n";
  } else {
    out << summary.checked << " diagrams, " << violations << " violations, equality: " << names(summary.equality_cases)
        << "\n";
    if (summary.min_ratio) {
      out << "min ratio " << summary.min_ratio->str() << " at " << names(summary.min_ratio_witnesses) << "\n";
    }
    if (summary.min_ratio_nontrivial) {
      out << "min ratio (not a trivial-snake sum) " << summary.min_ratio_nontrivial->str() << " at "
          << names(summary.min_ratio_nontrivial_witnesses) << "\n";
    }
  }
  return summary.ok() ? kOk : kVerificationFailed;
}

inline int cmd_sweep(const Settings& st, std::ostream& out) {
  SweepOptions opts;
  opts.workers = st.workers;
  opts.tutte.brute_force_cap = st.cap;
  auto summary = sweep(st.n, opts);
  std::string text = st.format == "json" ? to_json(summary, true).dump(2) + "\n" : sweep_report_text(summary);
  write_output(st, text, out);
  return summary.ok() ? kOk : kVerificationFailed;
}

inline int cmd_enumerate(const Settings& st, std::ostream& out) {
  DiagramFilter filter = DiagramFilter::lc;
  if (st.filter == "all") {
    filter = DiagramFilter::all;
  } else if (st.filter == "lc_connected") {
    filter = DiagramFilter::lc_connected;
  }
  std::ostringstream os;
  for_each_diagram(st.n, filter, [&](const LpmDiagram& d) { os << d.canonical() << "\n"; });
  return write_output(st, os.str(), out);
}

inline int cmd_draw(const Settings& st, std::ostream& out) {
  auto d = as_diagram(parse_object(st.object));
  return write_output(st, st.format == "svg" ? draw_svg(d) : draw_ascii(d), out);
}

}  // namespace detail

/// Parses argv, runs one verb, returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Lattice path matroids: Tutte evaluations, snakes, multi-fans and Merino-Welsh checks", "lpmtutte"};
  app.require_subcommand(1);
  Settings st;

  auto add_object = [&](CLI::App* sub) {
    sub->add_option("object", st.object,
                    "P:<word>;Q:<word> | S(a1,...) | F(c=..;d=..) | uniform:r,n | catalan:k")
        ->required();
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", st.cap, "largest component enumerated by brute force")->check(CLI::Range(1, 30));
  };

  auto* eval = app.add_subcommand("eval", "bases, T(2,0), T(0,2) and the Merino-Welsh ratio");
  add_object(eval);
  add_cap(eval);
  eval->add_option("--subset", st.subset, "also report the rank of a comma-separated element set");
  eval->add_option("--format", st.format)->check(CLI::IsMember({"text", "json"}));

  auto* tutte = app.add_subcommand("tutte", "full Tutte polynomial");
  add_object(tutte);
  add_cap(tutte);
  tutte->add_option("--format", st.format)->check(CLI::IsMember({"text", "json"}));

  auto* snake = app.add_subcommand("snake", "closed forms and checks for a snake");
  add_object(snake);
  add_cap(snake);
  snake->add_option("--format", st.format)->check(CLI::IsMember({"text", "json"}));

  auto* fan = app.add_subcommand("fan", "multi-fan graph: trees, orientations, Tutte polynomial");
  add_object(fan);
  fan->add_option("--format", st.format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "exhaustive Merino-Welsh check, summary only");
  verify->add_option("--n", st.n, "largest element count")->check(CLI::Range(1, 30));
  verify->add_option("--workers", st.workers)->check(CLI::Range(1, 256));
  add_cap(verify);
  verify->add_option("--format", st.format)->check(CLI::IsMember({"text", "json"}));

  auto* sweep_cmd = app.add_subcommand("sweep", "exhaustive Merino-Welsh check with a per-diagram report");
  sweep_cmd->add_option("--n", st.n, "largest element count")->check(CLI::Range(1, 30));
  sweep_cmd->add_option("--workers", st.workers)->check(CLI::Range(1, 256));
  add_cap(sweep_cmd);
  sweep_cmd->add_option("--format", st.format)->check(CLI::IsMember({"text", "json"}));
  sweep_cmd->add_option("--out", st.out_path, "write the report here instead of stdout");

  auto* enumerate = app.add_subcommand("enumerate", "list diagrams with exactly n elements");
  enumerate->add_option("--n", st.n)->check(CLI::Range(1, 30));
  enumerate->add_option("--filter", st.filter)->check(CLI::IsMember({"all", "lc", "lc_connected"}));
  enumerate->add_option("--out", st.out_path);

  auto* draw = app.add_subcommand("draw", "render a diagram");
  add_object(draw);
  draw->add_option("--format", st.format)->check(CLI::IsMember({"ascii", "svg", "text"}));
  draw->add_option("--out", st.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  st.has_subset = eval->count("--subset") > 0;

  try {
    if (*eval) return detail::cmd_eval(st, out);
    if (*tutte) return detail::cmd_tutte(st, out);
    if (*snake) return detail::cmd_snake(st, out);
    if (*fan) return detail::cmd_fan(st, out);
    if (*verify) return detail::cmd_verify(st, out);
    if (*sweep_cmd) return detail::cmd_sweep(st, out);
    if (*enumerate) return detail::cmd_enumerate(st, out);
    if (*draw) return detail::cmd_draw(st, out);
  } catch (const Error& e) {
    err << "error: " << to_json(e).dump() << "\n";
    return e.code() == ErrorCode::cap_exceeded ? kCapExceeded : kDomainError;
  }
  return kDomainError;
}

}  // namespace lpm::cli
