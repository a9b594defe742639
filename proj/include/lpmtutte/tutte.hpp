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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lpmtutte/bigint.hpp"
#include "lpmtutte/diagram.hpp"
#include "lpmtutte/error.hpp"
#include "lpmtutte/minor.hpp"
#include "lpmtutte/polynomial.hpp"

namespace lpm {

struct TutteOptions {
  /// Largest ground set the corank-nullity sum will enumerate (2^cap subsets).
  int brute_force_cap = 20;
};

/// counts[a][b] = number of subsets A with corank a and nullity b.
using CorankNullityTable = std::vector<std::vector<std::uint64_t>>;

namespace detail {

inline const std::array<std::int64_t, 65>& binomial_row(int n) {
  static const auto rows = [] {
    std::vector<std::array<std::int64_t, 65>> out(65);
    for (int i = 0; i <= 64; ++i) {
      out[static_cast<std::size_t>(i)].fill(0);
      out[static_cast<std::size_t>(i)][0] = 1;
      for (int k = 1; k <= i; ++k) {
        out[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
            out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k - 1)] +
            out[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)];
      }
    }
    return out;
  }();
  return rows[static_cast<std::size_t>(n)];
}

inline void require_within_cap(int size, const TutteOptions& options) {
  if (size > options.brute_force_cap) {
    throw Error(ErrorCode::cap_exceeded,
                "ground set of " + std::to_string(size) + " elements exceeds the brute-force cap of " +
                    std::to_string(options.brute_force_cap),
                size);
  }
}

}  // namespace detail

inline CorankNullityTable corank_nullity_counts(const MinorMatroid& m, const TutteOptions& options = {}) {
  const int n = m.size();
  detail::require_within_cap(n, options);
  const int total_rank = m.rank();
  CorankNullityTable counts(static_cast<std::size_t>(total_rank + 1),
                            std::vector<std::uint64_t>(static_cast<std::size_t>(n - total_rank + 1), 0));
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t a = 0; a < subsets; ++a) {
    int r = m.rank_local(a);
    int size = std::popcount(a);
    ++counts[static_cast<std::size_t>(total_rank - r)][static_cast<std::size_t>(size - r)];
  }
  return counts;
}

/// Expands sum counts[a][b] (x-1)^a (y-1)^b into the monomial basis.
inline BivariatePolynomial polynomial_from_counts(const CorankNullityTable& counts) {
  BivariatePolynomial out;
  for (std::size_t a = 0; a < counts.size(); ++a) {
    for (std::size_t b = 0; b < counts[a].size(); ++b) {
      if (counts[a][b] == 0) continue;
      const auto& row_a = detail::binomial_row(static_cast<int>(a));
      const auto& row_b = detail::binomial_row(static_cast<int>(b));
      for (std::size_t i = 0; i <= a; ++i) {
        for (std::size_t j = 0; j <= b; ++j) {
          BigInt c = BigInt(counts[a][b]) * row_a[i] * row_b[j];
          if ((a - i + b - j) % 2 == 1) c = -c;
          out.add_term(static_cast<int>(i), static_cast<int>(j), c);
        }
      }
    }
  }
  return out;
}

/// T(M; x, y) from the corank-nullity sum over all subsets of the ground set.
inline BivariatePolynomial tutte_subset_sum(const MinorMatroid& m, const TutteOptions& options = {}) {
  return polynomial_from_counts(corank_nullity_counts(m, options));
}

/// Number of monotone paths from (0,0) to (m,r) weakly between P and Q.
/// Runs over step counts k, tracking how many N steps were taken.
inline BigInt count_bases(const LpmDiagram& d) {
  std::vector<BigInt> ways(static_cast<std::size_t>(d.height()) + 1, BigInt(0));
  ways[0] = 1;
  for (int k = 1; k <= d.size(); ++k) {
    int lo = d.lower_north(k);
    int hi = d.upper_north(k);
    int prev_lo = d.lower_north(k - 1);
    int prev_hi = d.upper_north(k - 1);
    // Descending j so ways[j-1] still holds the previous layer.
    for (int j = hi; j >= lo; --j) {
      BigInt next = 0;
      if (j >= prev_lo && j <= prev_hi) next += ways[static_cast<std::size_t>(j)];
      if (j - 1 >= prev_lo && j - 1 <= prev_hi) next += ways[static_cast<std::size_t>(j - 1)];
      ways[static_cast<std::size_t>(j)] = std::move(next);
    }
    for (int j = prev_lo; j < lo; ++j) ways[static_cast<std::size_t>(j)] = 0;
  }
  return ways[static_cast<std::size_t>(d.height())];
}

/// T(M;x,y) as the product over the diagram's connected components. Loops
/// contribute y, coloops x; every other component goes through the subset sum.
inline BivariatePolynomial tutte_lpm(const LpmDiagram& d, const TutteOptions& options = {}) {
  BivariatePolynomial out = BivariatePolynomial::constant(1);
  for (const auto& part : components(d)) {
    if (part.size() == 1) {
      out *= part.height() == 0 ? BivariatePolynomial::y() : BivariatePolynomial::x();
    } else {
      detail::require_within_cap(part.size(), options);
      out *= tutte_subset_sum(MinorMatroid(part), options);
    }
  }
  return out;
}

/// T(2,0), T(0,2) and T(1,1), accumulated straight from corank-nullity counts.
struct KeyEvaluations {
  BigInt t20 = 1;
  BigInt t02 = 1;
  BigInt t11 = 1;
  friend bool operator==(const KeyEvaluations&, const KeyEvaluations&) = default;
};

inline KeyEvaluations key_evaluations(const MinorMatroid& m, const TutteOptions& options = {}) {
  auto counts = corank_nullity_counts(m, options);
  KeyEvaluations out{0, 0, 0};
  for (std::size_t a = 0; a < counts.size(); ++a) {
    for (std::size_t b = 0; b < counts[a].size(); ++b) {
      BigInt c = counts[a][b];
      // (2-1)^a (0-1)^b and (0-1)^a (2-1)^b; (1,1) keeps only a = b = 0.
      out.t20 += b % 2 == 0 ? c : BigInt(-c);
      out.t02 += a % 2 == 0 ? c : BigInt(-c);
      if (a == 0 && b == 0) out.t11 += c;
    }
  }
  return out;
}

inline KeyEvaluations key_evaluations(const LpmDiagram& d, const TutteOptions& options = {}) {
  KeyEvaluations out;
  for (const auto& part : components(d)) {
    if (part.size() == 1) {
      // Loop: y. Coloop: x.
      bool loop = part.height() == 0;
      out.t20 *= loop ? 0 : 2;
      out.t02 *= loop ? 2 : 0;
    } else {
      detail::require_within_cap(part.size(), options);
      auto part_values = key_evaluations(MinorMatroid(part), options);
      out.t20 *= part_values.t20;
      out.t02 *= part_values.t02;
      out.t11 *= part_values.t11;
    }
  }
  return out;
}

/// T(M) == T(M\e) + T(M/e) for e neither a loop nor a coloop.
inline bool check_deletion_contraction(const MinorMatroid& m, int e, const TutteOptions& options = {}) {
  if (m.is_loop(e)) throw Error(ErrorCode::loop_element, "loop: use factor y", e);
  if (m.is_coloop(e)) throw Error(ErrorCode::coloop_element, "coloop: use factor x", e);
  return tutte_subset_sum(m, options) ==
         tutte_subset_sum(m.deleted(e), options) + tutte_subset_sum(m.contracted(e), options);
}

/// T(M; y, x) == T(M*; x, y).
inline bool check_duality(const LpmDiagram& d, const TutteOptions& options = {}) {
  return tutte_lpm(d, options).swapped() == tutte_lpm(dual(d), options);
}

}  // namespace lpm
