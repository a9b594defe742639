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

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpm {

enum class ErrorCode {
  empty_input,
  invalid_symbol,
  parse_error,
  endpoint_mismatch,
  dominance_violation,
  unknown_element,
  invalid_composition,
  invalid_multifan,
  no_interior_point,
  loop_element,
  coloop_element,
  hypothesis_violated,
  cap_exceeded,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_input: return "empty_input";
    case ErrorCode::invalid_symbol: return "invalid_symbol";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::endpoint_mismatch: return "endpoint_mismatch";
    case ErrorCode::dominance_violation: return "dominance_violation";
    case ErrorCode::unknown_element: return "unknown_element";
    case ErrorCode::invalid_composition: return "invalid_composition";
    case ErrorCode::invalid_multifan: return "invalid_multifan";
    case ErrorCode::no_interior_point: return "no_interior_point";
    case ErrorCode::loop_element: return "loop_element";
    case ErrorCode::coloop_element: return "coloop_element";
    case ErrorCode::hypothesis_violated: return "hypothesis_violated";
    case ErrorCode::cap_exceeded: return "cap_exceeded";
  }
  return "unknown";
}

/// Structured error carrying a machine-readable code and, where it makes
/// sense, a 1-based position (symbol index, interval index or element).
/// position() is 0 when no position applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, int position = 0)
      : std::runtime_error(std::move(message)), code_(code), position_(position) {}

  ErrorCode code() const noexcept { return code_; }
  int position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  int position_;
};

}  // namespace lpm
