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

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lpmtutte/bigint.hpp"
#include "lpmtutte/diagram.hpp"
#include "lpmtutte/error.hpp"
#include "lpmtutte/minor.hpp"
#include "lpmtutte/snake.hpp"
#include "lpmtutte/tutte.hpp"

namespace lpm {

enum class DiagramFilter { all, lc, lc_connected };

namespace detail {

// Builds P and Q together, one step pair at a time, keeping Q weakly above P.
inline void enumerate_pairs(int n, int r, DiagramFilter filter, std::vector<Step>& lower, std::vector<Step>& upper,
                            int lower_north, int upper_north, const std::function<void(const LpmDiagram&)>& emit) {
  const int k = static_cast<int>(lower.size());
  if (k == n) {
    emit(LpmDiagram(LatticePath(lower), LatticePath(upper)));
    return;
  }
  const bool at_same_point = lower_north == upper_north;
  if (filter == DiagramFilter::lc_connected && k > 0 && at_same_point) return;
  for (Step q : {Step::north, Step::east}) {
    int qn = upper_north + (q == Step::north);
    if (qn > r) continue;
    for (Step p : {Step::north, Step::east}) {
      int pn = lower_north + (p == Step::north);
      if (pn > r || pn > qn) continue;
      if (n - (k + 1) < r - pn || n - (k + 1) < r - qn) continue;
      if (filter != DiagramFilter::all && at_same_point && p == q) continue;
      lower.push_back(p);
      upper.push_back(q);
      enumerate_pairs(n, r, filter, lower, upper, pn, qn, emit);
      lower.pop_back();
      upper.pop_back();
    }
  }
}

}  // namespace detail

/// Every diagram with n elements, grouped by rank r = 0..n, in a fixed order.
/// lc drops diagrams where P and Q share an edge; lc_connected also requires
/// P and Q to meet only at the corners.
inline void for_each_diagram(int n, DiagramFilter filter, const std::function<void(const LpmDiagram&)>& emit) {
  if (n < 1) return;
  for (int r = 0; r <= n; ++r) {
    std::vector<Step> lower;
    std::vector<Step> upper;
    detail::enumerate_pairs(n, r, filter, lower, upper, 0, 0, emit);
  }
}

inline std::vector<LpmDiagram> enumerate_diagrams(int n, DiagramFilter filter) {
  std::vector<LpmDiagram> out;
  for_each_diagram(n, filter, [&](const LpmDiagram& d) { out.push_back(d); });
  return out;
}

/// Every connected component is the single square S(1).
inline bool is_trivial_snake_sum(const LpmDiagram& d) {
  auto parts = components(d);
  return std::all_of(parts.begin(), parts.end(), [](const LpmDiagram& p) {
    return p.lower().word() == "EN" && p.upper().word() == "NE";
  });
}

/// Short human name: components joined by '+', each as S(...), loop,
/// coloop, or its canonical path pair.
inline std::string describe(const LpmDiagram& d) {
  std::string out;
  for (const auto& part : components(d)) {
    if (!out.empty()) out += "+";
    if (part.size() == 1) {
      out += part.height() == 0 ? "loop" : "coloop";
    } else if (auto snake = recognize_snake(part)) {
      out += snake->composition.str();
    } else {
      out += "[" + part.canonical() + "]";
    }
  }
  return out;
}

struct MwReport {
  std::string id;
  BigInt t20;
  BigInt t02;
  BigInt bases;
  /// 3 t20 t02 and 4 bases^2.
  BigInt lhs;
  BigInt rhs_43;
  bool satisfies_mw = false;
  bool satisfies_43 = false;
  bool equality_mw = false;
  bool is_trivial_snake_sum = false;
  bool is_connected = false;
  bool is_snake = false;

  /// t20 t02 / bases^2.
  Fraction ratio() const { return Fraction(t20 * t02, bases * bases); }
};

/// Merino-Welsh check for a loopless, coloopless diagram.
inline MwReport mw_check(const LpmDiagram& d, const TutteOptions& options = {}) {
  if (auto l = loops(d); !l.empty()) {
    throw Error(ErrorCode::hypothesis_violated, "diagram has a loop at element " + std::to_string(l.front()), l.front());
  }
  if (auto c = coloops(d); !c.empty()) {
    throw Error(ErrorCode::hypothesis_violated, "diagram has a coloop at element " + std::to_string(c.front()),
                c.front());
  }
  MwReport out;
  out.id = d.canonical();
  auto values = key_evaluations(d, options);
  out.t20 = std::move(values.t20);
  out.t02 = std::move(values.t02);
  out.bases = count_bases(d);
  BigInt product = out.t20 * out.t02;
  BigInt square = out.bases * out.bases;
  out.lhs = 3 * product;
  out.rhs_43 = 4 * square;
  out.satisfies_mw = product >= square;
  out.equality_mw = product == square;
  out.satisfies_43 = out.lhs >= out.rhs_43;
  out.is_trivial_snake_sum = is_trivial_snake_sum(d);
  out.is_connected = is_connected(d);
  out.is_snake = recognize_snake(d).has_value();
  return out;
}

/// Gluing step at the pivot of a connected non-snake diagram: with
/// (p, q, r) = T(M\e) and (s, t, u) = T(M/e) at (2,0), (0,2), (1,1), the
/// minors' 4/3 bounds must give 3 (p+s)(q+t) >= 4 (r+u)^2.
struct GluingInstance {
  int pivot = 0;
  KeyEvaluations deleted;
  KeyEvaluations contracted;
  bool minors_connected = false;
  bool sums_match = false;     // (p+s, q+t, r+u) equal the values of M itself
  bool hypothesis = false;     // both minors satisfy the 4/3 bound
  bool conclusion = false;     // 3 (p+s)(q+t) >= 4 (r+u)^2
};

inline GluingInstance gluing_instance(const LpmDiagram& d, const TutteOptions& options = {}) {
  GluingInstance out;
  out.pivot = pivot_element(d);
  MinorMatroid m(d);
  auto del = m.deleted(out.pivot);
  auto con = m.contracted(out.pivot);
  out.minors_connected = is_connected(del) && is_connected(con);
  out.deleted = key_evaluations(del, options);
  out.contracted = key_evaluations(con, options);
  auto whole = key_evaluations(m, options);
  const auto& a = out.deleted;
  const auto& b = out.contracted;
  out.sums_match = whole.t20 == a.t20 + b.t20 && whole.t02 == a.t02 + b.t02 && whole.t11 == a.t11 + b.t11;
  out.hypothesis = 3 * a.t20 * a.t02 >= 4 * a.t11 * a.t11 && 3 * b.t20 * b.t02 >= 4 * b.t11 * b.t11;
  BigInt r = a.t11 + b.t11;
  out.conclusion = 3 * (a.t20 + b.t20) * (a.t02 + b.t02) >= 4 * r * r;
  return out;
}

struct SweepWitness {
  std::string id;
  std::string name;
};

struct SweepSummary {
  int n_max = 0;
  long long checked = 0;
  long long mw_violations = 0;
  /// 4/3 violations among diagrams that are not trivial-snake sums.
  long long violations_43 = 0;
  /// Equality cases that are not trivial-snake sums, plus trivial-snake sums
  /// without equality. Both should be zero.
  long long equality_mismatches = 0;
  std::vector<SweepWitness> equality_cases;
  std::optional<Fraction> min_ratio;
  std::vector<SweepWitness> min_ratio_witnesses;
  std::optional<Fraction> min_ratio_nontrivial;
  std::vector<SweepWitness> min_ratio_nontrivial_witnesses;
  long long gluing_checked = 0;
  long long gluing_failures = 0;
  long long pivot_disconnected = 0;
  std::vector<MwReport> reports;

  bool ok() const {
    return mw_violations == 0 && violations_43 == 0 && equality_mismatches == 0 && gluing_failures == 0 &&
           pivot_disconnected == 0;
  }
};

struct SweepOptions {
  int workers = 1;
  bool keep_reports = true;
  bool check_gluing = true;
  TutteOptions tutte;
};

namespace detail {

struct SweepItem {
  long long index = 0;
  MwReport report;
  std::optional<GluingInstance> gluing;
};

inline void track_min(std::optional<Fraction>& best, std::vector<SweepWitness>& witnesses, const Fraction& value,
                      const SweepWitness& who) {
  if (!best || value < *best) {
    best = value;
    witnesses.assign(1, who);
  } else if (value == *best) {
    witnesses.push_back(who);
  }
}

}  // namespace detail

/// Checks every loopless, coloopless diagram with at most n_max elements.
/// Work is split round-robin across workers and merged in enumeration order,
/// so the summary does not depend on the worker count.
inline SweepSummary sweep(int n_max, const SweepOptions& options = {}) {
  if (n_max > options.tutte.brute_force_cap) {
    throw Error(ErrorCode::cap_exceeded, "n_max " + std::to_string(n_max) + " exceeds the brute-force cap", n_max);
  }
  std::vector<LpmDiagram> diagrams;
  for (int n = 1; n <= n_max; ++n) {
    for_each_diagram(n, DiagramFilter::lc, [&](const LpmDiagram& d) { diagrams.push_back(d); });
  }
  const int workers = std::max(1, options.workers);
  std::vector<detail::SweepItem> items(diagrams.size());
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    try {
      for (std::size_t i = static_cast<std::size_t>(w); i < diagrams.size(); i += static_cast<std::size_t>(workers)) {
        const auto& d = diagrams[i];
        auto& item = items[i];
        item.index = static_cast<long long>(i);
        item.report = mw_check(d, options.tutte);
        if (options.check_gluing && item.report.is_connected && !item.report.is_snake) {
          item.gluing = gluing_instance(d, options.tutte);
        }
      }
    } catch (...) {
      failures[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  SweepSummary summary;
  summary.n_max = n_max;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto& item = items[i];
    const auto& rep = item.report;
    SweepWitness who{rep.id, describe(diagrams[i])};
    ++summary.checked;
    if (!rep.satisfies_mw) ++summary.mw_violations;
    if (!rep.is_trivial_snake_sum && !rep.satisfies_43) ++summary.violations_43;
    if (rep.equality_mw != rep.is_trivial_snake_sum) ++summary.equality_mismatches;
    if (rep.equality_mw) summary.equality_cases.push_back(who);
    Fraction ratio = rep.ratio();
    detail::track_min(summary.min_ratio, summary.min_ratio_witnesses, ratio, who);
    if (!rep.is_trivial_snake_sum) {
      detail::track_min(summary.min_ratio_nontrivial, summary.min_ratio_nontrivial_witnesses, ratio, who);
    }
    if (item.gluing) {
      ++summary.gluing_checked;
      const auto& g = *item.gluing;
      if (!g.minors_connected) ++summary.pivot_disconnected;
      if (!g.sums_match || (g.hypothesis && !g.conclusion)) ++summary.gluing_failures;
    }
    if (options.keep_reports) summary.reports.push_back(std::move(item.report));
  }
  return summary;
}

}  // namespace lpm
