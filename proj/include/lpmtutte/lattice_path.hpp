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
#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpmtutte/error.hpp"

namespace lpm {

enum class Step : char { north = 'N', east = 'E' };

inline Step flipped(Step s) { return s == Step::north ? Step::east : Step::north; }

/// A monotone lattice path from the origin, stored as its word over {N, E}.
class LatticePath {
 public:
  LatticePath() = default;
  explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  /// Builds a path of `length` steps whose N steps sit at the given
  /// 1-based positions.
  static LatticePath from_north_positions(std::span<const int> positions, int length) {
    std::vector<Step> steps(static_cast<std::size_t>(length), Step::east);
    for (int p : positions) {
      if (p < 1 || p > length) {
        throw Error(ErrorCode::unknown_element,
                    "north position " + std::to_string(p) + " outside 1.." + std::to_string(length), p);
      }
      steps[static_cast<std::size_t>(p - 1)] = Step::north;
    }
    return LatticePath(std::move(steps));
  }

  const std::vector<Step>& steps() const { return steps_; }
  int length() const { return static_cast<int>(steps_.size()); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  int east_count() const {
    return static_cast<int>(std::count(steps_.begin(), steps_.end(), Step::east));
  }
  int north_count() const { return length() - east_count(); }

  /// 1-based positions of the N steps, ascending.
  std::vector<int> north_positions() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (steps_[i] == Step::north) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
  }

  /// prefix[k] = number of N steps among the first k steps, k = 0..length.
  std::vector<int> north_prefix() const {
    std::vector<int> prefix(steps_.size() + 1, 0);
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      prefix[i + 1] = prefix[i] + (steps_[i] == Step::north ? 1 : 0);
    }
    return prefix;
  }

  /// Swaps every N with E: the reflection in the diagonal x = y.
  LatticePath reflected() const {
    std::vector<Step> out(steps_.size());
    std::transform(steps_.begin(), steps_.end(), out.begin(), flipped);
    return LatticePath(std::move(out));
  }

  std::string word() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(static_cast<char>(s));
    return out;
  }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend LatticePath operator+(const LatticePath& a, const LatticePath& b) {
    std::vector<Step> out = a.steps_;
    out.insert(out.end(), b.steps_.begin(), b.steps_.end());
    return LatticePath(std::move(out));
  }

 private:
  std::vector<Step> steps_;
};

/// Parses a step word such as "EENN". Case-insensitive. Errors name the
/// 1-based position of the first offending character.
inline LatticePath parse_path(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::empty_input, "empty lattice path");
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (c == 'N') {
      steps.push_back(Step::north);
    } else if (c == 'E') {
      steps.push_back(Step::east);
    } else {
      int pos = static_cast<int>(i) + 1;
      throw Error(ErrorCode::invalid_symbol,
                  "invalid step '" + std::string(1, text[i]) + "' at position " + std::to_string(pos), pos);
    }
  }
  return LatticePath(std::move(steps));
}

inline LatticePath repeat_step(Step s, int count) {
  return LatticePath(std::vector<Step>(static_cast<std::size_t>(std::max(count, 0)), s));
}

}  // namespace lpm
