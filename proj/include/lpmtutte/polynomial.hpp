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
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lpmtutte/bigint.hpp"

namespace lpm {

/// Exponent pair (i, j) of the monomial x^i y^j.
struct Monomial {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in x and y with exact integer coefficients. Zero
/// coefficients are never stored.
class BivariatePolynomial {
 public:
  using Terms = std::map<Monomial, BigInt>;

  BivariatePolynomial() = default;

  static BivariatePolynomial constant(BigInt c) { return monomial(0, 0, std::move(c)); }
  static BivariatePolynomial x() { return monomial(1, 0, 1); }
  static BivariatePolynomial y() { return monomial(0, 1, 1); }
  static BivariatePolynomial monomial(int i, int j, BigInt c) {
    BivariatePolynomial p;
    p.add_term(i, j, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigInt coefficient(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(int i, int j, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(Monomial{i, j}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt evaluate(const BigInt& xv, const BigInt& yv) const {
    BigInt total = 0;
    for (const auto& [m, c] : terms_) {
      total += c * boost::multiprecision::pow(xv, static_cast<unsigned>(m.x)) *
               boost::multiprecision::pow(yv, static_cast<unsigned>(m.y));
    }
    return total;
  }

  /// p(y, x).
  BivariatePolynomial swapped() const {
    BivariatePolynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.y, m.x}, c);
    return out;
  }

  /// Largest (a, b) such that x^a y^b divides every term; (0, 0) for zero.
  Monomial monomial_divisor() const {
    if (terms_.empty()) return {0, 0};
    Monomial out{terms_.begin()->first.x, terms_.begin()->first.y};
    for (const auto& [m, c] : terms_) {
      out.x = std::min(out.x, m.x);
      out.y = std::min(out.y, m.y);
    }
    return out;
  }

  bool all_coefficients_nonnegative() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second >= 0; });
  }

  BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.x, m.y, c);
    return *this;
  }
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }

  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma.x + mb.x, ma.y + mb.y, ca * cb);
    }
    return out;
  }
  BivariatePolynomial& operator*=(const BivariatePolynomial& o) { return *this = *this * o; }

  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  /// Human-readable form, highest x-degree first, e.g. "x^2 + x + y".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, BigInt>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      return a.first.x != b.first.x ? a.first.x > b.first.x : a.first.y < b.first.y;
    });
    std::string out;
    for (const auto& [m, c] : ordered) {
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string mono;
      auto power = [](const char* var, int e) {
        return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
      };
      if (m.x > 0) mono += power("x", m.x);
      if (m.y > 0) mono += (mono.empty() ? "" : "*") + power("y", m.y);
      if (mono.empty()) {
        out += mag.str();
      } else if (mag == 1) {
        out += mono;
      } else {
        out += mag.str() + "*" + mono;
      }
    }
    return out;
  }

  /// (i, j, decimal coefficient) triples sorted by (i, j).
  std::vector<std::tuple<int, int, std::string>> triples() const {
    std::vector<std::tuple<int, int, std::string>> out;
    for (const auto& [m, c] : terms_) out.emplace_back(m.x, m.y, c.str());
    return out;
  }

 private:
  Terms terms_;
};

inline BivariatePolynomial pow(const BivariatePolynomial& p, unsigned k) {
  BivariatePolynomial out = BivariatePolynomial::constant(1);
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

inline BigInt eval(const BivariatePolynomial& p, const BigInt& x, const BigInt& y) { return p.evaluate(x, y); }

}  // namespace lpm
