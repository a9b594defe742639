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

#include <bit>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lpmtutte/diagram.hpp"
#include "lpmtutte/error.hpp"

namespace lpm {

/// Upper bound on the parent diagram size of a MinorMatroid; subsets are
/// 64-bit masks.
inline constexpr int kMaxMinorElements = 64;

/// A minor of a lattice path matroid, kept as the parent diagram plus the
/// sets of deleted and contracted elements. Element labels are the parent's
/// 1-based positions. Rank queries compose the parent's greedy rank:
/// r'(X) = r(X u C) - r(C).
class MinorMatroid {
 public:
  explicit MinorMatroid(LpmDiagram parent)
      : parent_(std::make_shared<const LpmDiagram>(std::move(parent))) {
    if (parent_->size() > kMaxMinorElements) {
      throw Error(ErrorCode::cap_exceeded,
                  "minor oracles support at most " + std::to_string(kMaxMinorElements) + " elements");
    }
    intervals_ = std::make_shared<const std::vector<Interval>>(parent_->presentation());
    rebuild();
  }

  const LpmDiagram& parent() const { return *parent_; }
  const std::vector<int>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  std::uint64_t deleted_mask() const { return deleted_; }
  std::uint64_t contracted_mask() const { return contracted_; }

  bool contains(int e) const { return e >= 1 && e <= parent_->size() && (remaining_ >> (e - 1) & 1U); }

  /// Rank over a mask of parent labels (bit e-1 marks element e).
  int rank_labels_mask(std::uint64_t labels) const {
    return detail::greedy_rank_mask(*intervals_, labels | contracted_) - contracted_rank_;
  }

  /// Rank over a mask of ground positions: bit i marks ground()[i].
  int rank_local(std::uint64_t local) const { return rank_labels_mask(to_labels(local)); }

  int rank(std::span<const int> elements) const {
    std::uint64_t mask = 0;
    for (int e : elements) mask |= label_bit(e);
    return rank_labels_mask(mask);
  }

  int rank() const { return rank_labels_mask(remaining_); }

  std::uint64_t to_labels(std::uint64_t local) const {
    std::uint64_t labels = 0;
    while (local != 0) {
      int i = std::countr_zero(local);
      local &= local - 1;
      labels |= std::uint64_t{1} << (ground_[static_cast<std::size_t>(i)] - 1);
    }
    return labels;
  }

  bool is_loop(int e) const { return rank_labels_mask(label_bit(e)) == 0; }
  bool is_coloop(int e) const { return rank_labels_mask(remaining_ & ~label_bit(e)) < rank(); }

  MinorMatroid deleted(int e) const {
    MinorMatroid out = *this;
    out.deleted_ |= label_bit(e);
    out.rebuild();
    return out;
  }

  MinorMatroid contracted(int e) const {
    MinorMatroid out = *this;
    out.contracted_ |= label_bit(e);
    out.rebuild();
    return out;
  }

 private:
  std::uint64_t label_bit(int e) const {
    if (!contains(e)) {
      throw Error(ErrorCode::unknown_element, "element " + std::to_string(e) + " is not in the ground set", e);
    }
    return std::uint64_t{1} << (e - 1);
  }

  void rebuild() {
    std::uint64_t all = parent_->size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << parent_->size()) - 1;
    remaining_ = all & ~deleted_ & ~contracted_;
    ground_.clear();
    for (int e = 1; e <= parent_->size(); ++e) {
      if (remaining_ >> (e - 1) & 1U) ground_.push_back(e);
    }
    contracted_rank_ = detail::greedy_rank_mask(*intervals_, contracted_);
  }

  std::shared_ptr<const LpmDiagram> parent_;
  std::shared_ptr<const std::vector<Interval>> intervals_;
  std::uint64_t deleted_ = 0;
  std::uint64_t contracted_ = 0;
  std::uint64_t remaining_ = 0;
  std::vector<int> ground_;
  int contracted_rank_ = 0;
};

inline MinorMatroid delete_element(const MinorMatroid& m, int e) { return m.deleted(e); }
inline MinorMatroid contract_element(const MinorMatroid& m, int e) { return m.contracted(e); }

/// Separator test: no proper nonempty X with r(X) + r(E \ X) = r(E).
/// Exponential in the ground set size.
inline bool is_connected(const MinorMatroid& m) {
  int n = m.size();
  if (n <= 1) return true;
  if (n > 30) throw Error(ErrorCode::cap_exceeded, "separator test limited to 30 elements");
  std::uint64_t full = (std::uint64_t{1} << n) - 1;
  int total = m.rank();
  // Fixing the last element inside E \ X enumerates each split once.
  std::uint64_t half = std::uint64_t{1} << (n - 1);
  for (std::uint64_t x = 1; x < half; ++x) {
    if (m.rank_local(x) + m.rank_local(full & ~x) == total) return false;
  }
  return true;
}

}  // namespace lpm
