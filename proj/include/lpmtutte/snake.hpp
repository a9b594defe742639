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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lpmtutte/bigint.hpp"
#include "lpmtutte/diagram.hpp"
#include "lpmtutte/error.hpp"
#include "lpmtutte/tutte.hpp"

namespace lpm {

/// S(a_1, ..., a_n): a_1 squares to the right, then a_2 up, a_3 right, ...
/// consecutive runs sharing their corner square. Requires a_1 >= 1 and
/// a_i >= 2 for i >= 2.
class SnakeComposition {
 public:
  explicit SnakeComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw Error(ErrorCode::invalid_composition, "a snake needs at least one run");
    if (parts_[0] < 1) throw Error(ErrorCode::invalid_composition, "a_1 must be at least 1", 1);
    for (std::size_t i = 1; i < parts_.size(); ++i) {
      if (parts_[i] < 2) {
        throw Error(ErrorCode::invalid_composition,
                    "a_" + std::to_string(i + 1) + " must be at least 2", static_cast<int>(i) + 1);
      }
    }
  }
  SnakeComposition(std::initializer_list<int> parts) : SnakeComposition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int runs() const { return static_cast<int>(parts_.size()); }
  /// 1-based access a_i.
  int a(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }

  int element_count() const {
    int n = 1 + parts_[0];
    for (std::size_t i = 1; i < parts_.size(); ++i) n += parts_[i] - 1;
    return n;
  }

  bool is_trivial() const { return parts_.size() == 1 && parts_[0] == 1; }

  std::string str() const {
    std::string out = "S(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const SnakeComposition&, const SnakeComposition&) = default;
  friend auto operator<=>(const SnakeComposition&, const SnakeComposition&) = default;

 private:
  std::vector<int> parts_;
};

/// Parses "S(2,3)"; whitespace and case are ignored.
inline SnakeComposition parse_snake(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 4 || (s[0] != 'S' && s[0] != 's') || s[1] != '(' || s.back() != ')') {
    throw Error(ErrorCode::parse_error, "expected a snake like 'S(2,3)', got '" + std::string(text) + "'");
  }
  std::vector<int> parts;
  std::string_view body = std::string_view(s).substr(2, s.size() - 3);
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    auto field = body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start);
    if (field.empty() || field.size() > 6) {
      throw Error(ErrorCode::parse_error, "bad snake run '" + std::string(field) + "'");
    }
    int value = 0;
    for (char c : field) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::parse_error, "bad snake run '" + std::string(field) + "'");
      }
      value = value * 10 + (c - '0');
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return SnakeComposition(std::move(parts));
}

/// The staircase ribbon: P = E w N and Q = N w E, where w lists the moves
/// between consecutive squares (E for right, N for up).
inline LpmDiagram snake_diagram(const SnakeComposition& s) {
  std::vector<Step> moves;
  for (int i = 1; i <= s.runs(); ++i) {
    Step dir = i % 2 == 1 ? Step::east : Step::north;
    for (int k = 0; k < s.a(i) - 1; ++k) moves.push_back(dir);
  }
  LatticePath middle(std::move(moves));
  LatticePath lower = repeat_step(Step::east, 1) + middle + repeat_step(Step::north, 1);
  LatticePath upper = repeat_step(Step::north, 1) + middle + repeat_step(Step::east, 1);
  return LpmDiagram(std::move(lower), std::move(upper));
}

struct RecognizedSnake {
  SnakeComposition composition;
  /// The ribbon leaves the first square upwards (so a_1 = 1 and n > 1).
  bool first_run_vertical = false;
};

/// Recognizes snakes: at least two elements, connected, no interior points.
inline std::optional<RecognizedSnake> recognize_snake(const LpmDiagram& d) {
  if (d.size() < 2 || !is_connected(d) || !interior_points(d).empty()) return std::nullopt;
  // Connected with no interior points forces Q = N w E and P = E w N.
  const auto& upper = d.upper().steps();
  const std::size_t end = upper.size() - 1;
  std::size_t k = 1;
  int lead = 0;
  while (k < end && upper[k] == Step::east) {
    ++lead;
    ++k;
  }
  std::vector<int> parts{lead + 1};
  while (k < end) {
    Step dir = upper[k];
    int run = 0;
    while (k < end && upper[k] == dir) {
      ++run;
      ++k;
    }
    parts.push_back(run + 1);
  }
  RecognizedSnake out{SnakeComposition(parts), parts.size() > 1 && parts[0] == 1};
  return out;
}

/// S*(a_1..a_n): (1, a_1, ..., a_n) if a_1 > 1; (a_2..a_n) if a_1 = 1 < n; (1) if a_1 = 1 = n.
inline SnakeComposition snake_dual(const SnakeComposition& s) {
  const auto& a = s.parts();
  if (a[0] > 1) {
    std::vector<int> out{1};
    out.insert(out.end(), a.begin(), a.end());
    return SnakeComposition(std::move(out));
  }
  if (a.size() > 1) return SnakeComposition(std::vector<int>(a.begin() + 1, a.end()));
  return SnakeComposition({1});
}

/// T(S;1,1) by the last-run recursion
/// T(S(a_1..a_n)) = T(S(a_1..a_{n-1})) + (a_n - 1) T(S(a_1..a_{n-1} - 1)),
/// where a run shortened to 1 drops out and S(0) is the single lattice point.
/// Unrolled over prefixes: full[i] = T(S(a_1..a_i)),
/// shortened[i] = T(S(a_1..a_i - 1)).
inline BigInt bases_recursive(const SnakeComposition& s) {
  const auto& a = s.parts();
  BigInt full = a[0] + 1;
  BigInt shortened = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    BigInt next_full = full + BigInt(a[i] - 1) * shortened;
    BigInt next_shortened = full + BigInt(a[i] - 2) * shortened;
    full = std::move(next_full);
    shortened = std::move(next_shortened);
  }
  return full;
}

/// T(S;1,1) = sum over b in Fib(n+1) of prod_i (a_i - 1)^(1 - |b_{i+1} - b_i|),
/// summed by a transfer over the last bit of b.
inline BigInt bases_fib_sum(const SnakeComposition& s) {
  // ending[bit] = weighted count of admissible prefixes b_1..b_i ending in bit.
  BigInt ending0 = 1;
  BigInt ending1 = 1;
  for (int a : s.parts()) {
    BigInt same = a - 1;
    BigInt next0 = ending0 * same + ending1;  // 0->0 weighs a-1, 1->0 weighs 1
    BigInt next1 = ending0;                    // 0->1 weighs 1, 1->1 is forbidden
    ending0 = std::move(next0);
    ending1 = std::move(next1);
  }
  return ending0 + ending1;
}

namespace detail {

inline BigInt parity_product(const std::vector<int>& a, int parity) {
  BigInt out = 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((i + 1) % 2 == static_cast<std::size_t>(parity)) out *= pow2_minus_one(static_cast<unsigned>(a[i]));
  }
  return out;
}

}  // namespace detail

/// T(S;2,0) = 2 prod_{i even} (2^{a_i} - 1), for a_1 >= 2 or S(1); a_1 = 1
/// goes through the dual.
inline BigInt eval20(const SnakeComposition& s);
inline BigInt eval02(const SnakeComposition& s);

inline BigInt eval20(const SnakeComposition& s) {
  if (s.a(1) == 1 && s.runs() > 1) return eval02(snake_dual(s));
  return detail::parity_product(s.parts(), 0);
}

/// T(S;0,2) = 2 prod_{i odd} (2^{a_i} - 1).
inline BigInt eval02(const SnakeComposition& s) {
  if (s.a(1) == 1 && s.runs() > 1) return eval20(snake_dual(s));
  return detail::parity_product(s.parts(), 1);
}

inline BigInt snake_product_closed_form(const SnakeComposition& s) {
  BigInt out = 4;
  for (int a : s.parts()) out *= pow2_minus_one(static_cast<unsigned>(a));
  return out;
}

struct ProductIdentityResult {
  bool formula_holds = false;
  /// False when the snake exceeds the brute-force cap; the oracle was skipped.
  bool oracle_checked = false;
  bool oracle_agrees = false;
  bool ok() const { return formula_holds && (!oracle_checked || oracle_agrees); }
  bool partial() const { return !oracle_checked; }
};

/// eval20 * eval02 == 4 prod (2^{a_i} - 1), and both factors agree with the
/// corank-nullity sum when the snake fits under the cap.
inline ProductIdentityResult product_identity_check(const SnakeComposition& s, const TutteOptions& options = {}) {
  ProductIdentityResult out;
  BigInt t20 = eval20(s);
  BigInt t02 = eval02(s);
  out.formula_holds = t20 * t02 == snake_product_closed_form(s);
  if (s.element_count() <= options.brute_force_cap) {
    out.oracle_checked = true;
    auto values = key_evaluations(MinorMatroid(snake_diagram(s)), options);
    out.oracle_agrees = values.t20 == t20 && values.t02 == t02;
  }
  return out;
}

/// 3 T(2,0) T(0,2) against 4 T(1,1)^2, in integers.
struct MwMargin {
  BigInt lhs;
  BigInt rhs;
  bool satisfied_43 = false;
  bool equality = false;
};

inline MwMargin mw_margin(const SnakeComposition& s) {
  MwMargin out;
  BigInt bases = bases_recursive(s);
  out.lhs = 3 * eval20(s) * eval02(s);
  out.rhs = 4 * bases * bases;
  out.satisfied_43 = out.lhs >= out.rhs;
  out.equality = out.lhs == out.rhs;
  return out;
}

}  // namespace lpm
