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
#include <bit>
#include <cctype>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpmtutte/error.hpp"
#include "lpmtutte/lattice_path.hpp"

namespace lpm {

/// Closed integer interval [lo, hi] of ground-set elements.
struct Interval {
  int lo = 0;
  int hi = 0;
  bool contains(int e) const { return lo <= e && e <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

namespace detail {

// Index of the first i (1-based) with t_i > s_i, or 0 when Q dominates P.
inline int first_interval_violation(const LatticePath& lower, const LatticePath& upper) {
  auto s = lower.north_positions();
  auto t = upper.north_positions();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (t[i] > s[i]) return static_cast<int>(i) + 1;
  }
  return 0;
}

}  // namespace detail

/// Q stays weakly above P iff each prefix of Q has at least as many N
/// steps as the same-length prefix of P. Paths must have equal length.
inline bool dominates_by_prefix(const LatticePath& lower, const LatticePath& upper) {
  auto p = lower.north_prefix();
  auto q = upper.north_prefix();
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (q[k] < p[k]) return false;
  }
  return true;
}

/// The lattice path matroid M[P, Q] given by its bounding paths. P is the
/// lower path, Q the upper one. Ground set elements are 1..m+r.
class LpmDiagram {
 public:
  LpmDiagram(LatticePath lower, LatticePath upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    if (lower_.length() != upper_.length() || lower_.north_count() != upper_.north_count()) {
      throw Error(ErrorCode::endpoint_mismatch,
                  "paths end at different points: P ends at (" + std::to_string(lower_.east_count()) + "," +
                      std::to_string(lower_.north_count()) + "), Q ends at (" +
                      std::to_string(upper_.east_count()) + "," + std::to_string(upper_.north_count()) + ")");
    }
    if (int i = detail::first_interval_violation(lower_, upper_); i != 0) {
      throw Error(ErrorCode::dominance_violation,
                  "Q passes below P: t_" + std::to_string(i) + " > s_" + std::to_string(i), i);
    }
    lower_prefix_ = lower_.north_prefix();
    upper_prefix_ = upper_.north_prefix();
  }

  const LatticePath& lower() const { return lower_; }
  const LatticePath& upper() const { return upper_; }

  int size() const { return lower_.length(); }
  int width() const { return lower_.east_count(); }
  int height() const { return lower_.north_count(); }
  int rank() const { return height(); }

  /// Number of N steps of P (resp. Q) among the first k steps.
  int lower_north(int k) const { return lower_prefix_[static_cast<std::size_t>(k)]; }
  int upper_north(int k) const { return upper_prefix_[static_cast<std::size_t>(k)]; }

  /// True when the lattice point (x, y) lies in the closed region between P and Q.
  bool contains_point(int x, int y) const {
    int k = x + y;
    if (x < 0 || y < 0 || k > size()) return false;
    return lower_north(k) <= y && y <= upper_north(k);
  }

  /// The unit square with lower-left corner (x, y) lies in the region.
  bool contains_cell(int x, int y) const { return contains_point(x + 1, y) && contains_point(x, y + 1); }

  /// The interval presentation (A_1, ..., A_r), A_i = [t_i, s_i].
  std::vector<Interval> presentation() const {
    auto s = lower_.north_positions();
    auto t = upper_.north_positions();
    std::vector<Interval> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = {t[i], s[i]};
    return out;
  }

  std::string canonical() const { return "P:" + lower_.word() + ";Q:" + upper_.word(); }

  friend bool operator==(const LpmDiagram& a, const LpmDiagram& b) {
    return a.lower_ == b.lower_ && a.upper_ == b.upper_;
  }

 private:
  LatticePath lower_;
  LatticePath upper_;
  std::vector<int> lower_prefix_;
  std::vector<int> upper_prefix_;
};

inline LpmDiagram lpm_new(LatticePath lower, LatticePath upper) {
  return LpmDiagram(std::move(lower), std::move(upper));
}

inline std::vector<Interval> presentation(const LpmDiagram& d) { return d.presentation(); }

namespace detail {

// Greedy transversal size for a sorted, duplicate-free element sequence.
// Interval endpoints are nondecreasing in both coordinates, so the lowest
// unused interval that still reaches e is the one to take.
template <typename Elements>
int greedy_rank(const std::vector<Interval>& intervals, const Elements& sorted_elements) {
  std::size_t j = 0;
  int matched = 0;
  for (int e : sorted_elements) {
    while (j < intervals.size() && intervals[j].hi < e) ++j;
    if (j == intervals.size()) break;
    if (intervals[j].lo <= e) {
      ++matched;
      ++j;
    }
  }
  return matched;
}

// Same rule over a bitmask where bit (e-1) marks element e.
inline int greedy_rank_mask(const std::vector<Interval>& intervals, std::uint64_t mask) {
  std::size_t j = 0;
  int matched = 0;
  while (mask != 0) {
    int e = std::countr_zero(mask) + 1;
    mask &= mask - 1;
    while (j < intervals.size() && intervals[j].hi < e) ++j;
    if (j == intervals.size()) break;
    if (intervals[j].lo <= e) {
      ++matched;
      ++j;
    }
  }
  return matched;
}

}  // namespace detail

/// Rank of an element subset: the size of a largest partial transversal.
inline int rank(const LpmDiagram& d, std::span<const int> elements) {
  std::vector<int> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int e : sorted) {
    if (e < 1 || e > d.size()) {
      throw Error(ErrorCode::unknown_element, "element " + std::to_string(e) + " is not in the ground set", e);
    }
  }
  return detail::greedy_rank(d.presentation(), sorted);
}

/// Reflection in x = y; the reflected Q becomes the new lower path.
inline LpmDiagram dual(const LpmDiagram& d) { return LpmDiagram(d.upper().reflected(), d.lower().reflected()); }

/// Steps where P and Q traverse the same horizontal unit edge.
inline std::vector<int> loops(const LpmDiagram& d) {
  std::vector<int> out;
  for (int k = 0; k < d.size(); ++k) {
    auto ks = static_cast<std::size_t>(k);
    if (d.lower_north(k) == d.upper_north(k) && d.lower()[ks] == Step::east && d.upper()[ks] == Step::east) {
      out.push_back(k + 1);
    }
  }
  return out;
}

/// Steps where P and Q traverse the same vertical unit edge.
inline std::vector<int> coloops(const LpmDiagram& d) {
  std::vector<int> out;
  for (int k = 0; k < d.size(); ++k) {
    auto ks = static_cast<std::size_t>(k);
    if (d.lower_north(k) == d.upper_north(k) && d.lower()[ks] == Step::north && d.upper()[ks] == Step::north) {
      out.push_back(k + 1);
    }
  }
  return out;
}

inline bool is_loopless_coloopless(const LpmDiagram& d) { return loops(d).empty() && coloops(d).empty(); }

/// Step counts k in 1..n-1 at which P and Q meet.
inline std::vector<int> meeting_steps(const LpmDiagram& d) {
  std::vector<int> out;
  for (int k = 1; k < d.size(); ++k) {
    if (d.lower_north(k) == d.upper_north(k)) out.push_back(k);
  }
  return out;
}

/// Connected iff P and Q meet only at the two corners.
inline bool is_connected(const LpmDiagram& d) { return meeting_steps(d).empty(); }

/// Splits at every interior meeting point, each piece translated to the origin.
inline std::vector<LpmDiagram> components(const LpmDiagram& d) {
  std::vector<int> cuts = meeting_steps(d);
  cuts.insert(cuts.begin(), 0);
  cuts.push_back(d.size());
  std::vector<LpmDiagram> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    auto from = d.lower().steps().begin() + cuts[i];
    auto to = d.lower().steps().begin() + cuts[i + 1];
    LatticePath lower(std::vector<Step>(from, to));
    auto ufrom = d.upper().steps().begin() + cuts[i];
    auto uto = d.upper().steps().begin() + cuts[i + 1];
    LatticePath upper(std::vector<Step>(ufrom, uto));
    out.emplace_back(std::move(lower), std::move(upper));
  }
  return out;
}

/// Corner-to-corner concatenation.
inline LpmDiagram direct_sum(std::span<const LpmDiagram> parts) {
  if (parts.empty()) throw Error(ErrorCode::empty_input, "direct sum of no diagrams");
  LatticePath lower;
  LatticePath upper;
  for (const auto& part : parts) {
    lower = lower + part.lower();
    upper = upper + part.upper();
  }
  return LpmDiagram(std::move(lower), std::move(upper));
}

inline LpmDiagram direct_sum(const LpmDiagram& a, const LpmDiagram& b) {
  return LpmDiagram(a.lower() + b.lower(), a.upper() + b.upper());
}

/// Lattice points strictly inside the region, ordered by step count then height.
inline std::vector<LatticePoint> interior_points(const LpmDiagram& d) {
  std::vector<LatticePoint> out;
  for (int k = 1; k < d.size(); ++k) {
    for (int y = d.lower_north(k) + 1; y < d.upper_north(k); ++y) out.push_back({k - y, y});
  }
  return out;
}

/// Element x + y + 1 for the highest, then rightmost, interior point (x, y).
inline int pivot_element(const LpmDiagram& d) {
  auto points = interior_points(d);
  if (points.empty()) {
    throw Error(ErrorCode::no_interior_point, "diagram has no interior lattice point (snake or degenerate)");
  }
  auto best = std::max_element(points.begin(), points.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.y != b.y ? a.y < b.y : a.x < b.x;
  });
  return best->x + best->y + 1;
}

/// U_{r,r+n}: Q = N^r E^n, P = E^n N^r.
inline LpmDiagram uniform_diagram(int rank, int corank) {
  return LpmDiagram(repeat_step(Step::east, corank) + repeat_step(Step::north, rank),
                    repeat_step(Step::north, rank) + repeat_step(Step::east, corank));
}

/// The k-Catalan matroid: Q = (NE)^k, P = E^k N^k.
inline LpmDiagram catalan_diagram(int k) {
  LatticePath upper;
  for (int i = 0; i < k; ++i) upper = upper + parse_path("NE");
  return LpmDiagram(repeat_step(Step::east, k) + repeat_step(Step::north, k), std::move(upper));
}

/// Parses "P:<word>;Q:<word>" (keys in either order). Whitespace and case
/// are ignored.
inline LpmDiagram parse_diagram(std::string_view text) {
  std::string cleaned;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      cleaned.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  if (cleaned.empty()) throw Error(ErrorCode::empty_input, "empty diagram");
  auto semi = cleaned.find(';');
  if (semi == std::string::npos) throw Error(ErrorCode::parse_error, "expected 'P:<word>;Q:<word>'");
  std::optional<LatticePath> lower;
  std::optional<LatticePath> upper;
  for (std::string_view field : {std::string_view(cleaned).substr(0, semi), std::string_view(cleaned).substr(semi + 1)}) {
    if (field.size() < 2 || field[1] != ':' || (field[0] != 'P' && field[0] != 'Q')) {
      throw Error(ErrorCode::parse_error, "expected 'P:<word>' or 'Q:<word>', got '" + std::string(field) + "'");
    }
    auto& slot = field[0] == 'P' ? lower : upper;
    if (slot) throw Error(ErrorCode::parse_error, std::string("path ") + field[0] + " given twice");
    slot = parse_path(field.substr(2));
  }
  if (!lower || !upper) throw Error(ErrorCode::parse_error, "both P and Q are required");
  return LpmDiagram(std::move(*lower), std::move(*upper));
}

}  // namespace lpm
