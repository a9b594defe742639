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
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpmtutte/bigint.hpp"
#include "lpmtutte/error.hpp"
#include "lpmtutte/polynomial.hpp"
#include "lpmtutte/snake.hpp"

namespace lpm {

/// F(c, d): a hub joined by c_i parallel edges to spine vertex v_i, with
/// v_j and v_{j+1} joined by a path of d_j series edges.
class MultiFan {
 public:
  MultiFan(std::vector<int> bundles, std::vector<int> segments)
      : c_(std::move(bundles)), d_(std::move(segments)) {
    if (c_.empty()) throw Error(ErrorCode::invalid_multifan, "a multi-fan needs at least one bundle");
    if (d_.size() + 1 != c_.size()) {
      throw Error(ErrorCode::invalid_multifan, "need exactly one path segment between consecutive bundles");
    }
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] < 1) throw Error(ErrorCode::invalid_multifan, "bundle sizes must be positive", static_cast<int>(i) + 1);
    }
    for (std::size_t j = 0; j < d_.size(); ++j) {
      if (d_[j] < 1) throw Error(ErrorCode::invalid_multifan, "segment lengths must be positive", static_cast<int>(j) + 1);
    }
  }

  const std::vector<int>& c() const { return c_; }
  const std::vector<int>& d() const { return d_; }
  int spine_length() const { return static_cast<int>(c_.size()); }

  int edge_count() const {
    int n = 0;
    for (int v : c_) n += v;
    for (int v : d_) n += v;
    return n;
  }

  std::string str() const {
    auto join = [](const std::vector<int>& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
      return out;
    };
    std::string out = "F(c=" + join(c_);
    if (!d_.empty()) out += ";d=" + join(d_);
    return out + ")";
  }

  friend bool operator==(const MultiFan&, const MultiFan&) = default;

 private:
  std::vector<int> c_;
  std::vector<int> d_;
};

/// Parses "F(c=2,1;d=2)"; the d field may be omitted or empty when ell = 1.
inline MultiFan parse_multifan(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s.size() < 3 || s[0] != 'f' || s[1] != '(' || s.back() != ')') {
    throw Error(ErrorCode::parse_error, "expected a multi-fan like 'F(c=2,1;d=2)', got '" + std::string(text) + "'");
  }
  auto parse_list = [&](std::string_view body) {
    std::vector<int> out;
    if (body.empty()) return out;
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      auto field = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      if (field.empty() || field.size() > 6 ||
          field.find_first_not_of("0123456789") != std::string_view::npos) {
        throw Error(ErrorCode::parse_error, "bad multi-fan entry '" + std::string(field) + "'");
      }
      out.push_back(std::stoi(std::string(field)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  };
  std::string_view body = std::string_view(s).substr(2, s.size() - 3);
  std::vector<int> c;
  std::vector<int> d;
  bool seen_c = false;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto semi = body.find(';', start);
    auto field = body.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
    if (field.rfind("c=", 0) == 0) {
      c = parse_list(field.substr(2));
      seen_c = true;
    } else if (field.rfind("d=", 0) == 0) {
      d = parse_list(field.substr(2));
    } else {
      throw Error(ErrorCode::parse_error, "unknown multi-fan field '" + std::string(field) + "'");
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  if (!seen_c) throw Error(ErrorCode::parse_error, "multi-fan is missing its c= field");
  return MultiFan(std::move(c), std::move(d));
}

/// The multi-fan whose graphic matroid is S(a_1, ..., a_n):
///   c = (a_1 + 1)                                     if n = 1,
///   c = (a_1, a_3 - 1, ..., a_{2k-1} - 1, a_{2k+1})   if n = 2k + 1 > 1,
///   c = (a_1, a_3 - 1, ..., a_{2k-1} - 1, 1)          if n = 2k,
///   d = (a_2 - 1, a_4 - 1, ..., a_{2k} - 1).
inline MultiFan fan_from_snake(const SnakeComposition& s) {
  const int n = s.runs();
  if (n == 1) return MultiFan({s.a(1) + 1}, {});
  std::vector<int> c{s.a(1)};
  std::vector<int> d;
  for (int i = 2; i <= n; i += 2) d.push_back(s.a(i) - 1);
  // Interior odd runs lose the square they share with both neighbours.
  for (int i = 3; i < n; i += 2) c.push_back(s.a(i) - 1);
  c.push_back(n % 2 == 1 ? s.a(n) : 1);
  return MultiFan(std::move(c), std::move(d));
}

/// The multi-fan of the dual snake, case by case from the dual snake
/// parameters (kept separate from fan_from_snake(snake_dual(s)) so the two
/// can be compared).
inline MultiFan fan_from_dual_snake(const SnakeComposition& s) {
  const int n = s.runs();
  std::vector<int> c;
  std::vector<int> d;
  if (s.a(1) > 1) {
    // n = 2k + 1: c' = (1, a_2 - 1, ..., a_{2k} - 1, 1),        d' = (a_1 - 1, a_3 - 1, ..., a_{2k+1} - 1)
    // n = 2k:     c' = (1, a_2 - 1, ..., a_{2k-2} - 1, a_{2k}), d' = (a_1 - 1, a_3 - 1, ..., a_{2k-1} - 1)
    c.push_back(1);
    if (n % 2 == 1) {
      for (int i = 2; i <= n - 1; i += 2) c.push_back(s.a(i) - 1);
      c.push_back(1);
    } else {
      for (int i = 2; i <= n - 2; i += 2) c.push_back(s.a(i) - 1);
      c.push_back(s.a(n));
    }
    for (int i = 1; i <= n; i += 2) d.push_back(s.a(i) - 1);
    return MultiFan(std::move(c), std::move(d));
  }
  if (n == 1) return MultiFan({2}, {});
  if (n == 2) return MultiFan({s.a(2) + 1}, {});
  // a_1 = 1:
  // n = 2k + 1: c' = (a_2, a_4 - 1, ..., a_{2k} - 1, 1),       d' = (a_3 - 1, ..., a_{2k+1} - 1)
  // n = 2k:     c' = (a_2, a_4 - 1, ..., a_{2k-2} - 1, a_{2k}), d' = (a_3 - 1, ..., a_{2k-1} - 1)
  c.push_back(s.a(2));
  if (n % 2 == 1) {
    for (int i = 4; i <= n - 1; i += 2) c.push_back(s.a(i) - 1);
    c.push_back(1);
  } else {
    for (int i = 4; i <= n - 2; i += 2) c.push_back(s.a(i) - 1);
    c.push_back(s.a(n));
  }
  for (int i = 3; i <= n; i += 2) d.push_back(s.a(i) - 1);
  return MultiFan(std::move(c), std::move(d));
}

struct Edge {
  int u = 0;
  int v = 0;
  int id = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph on vertices 0..vertex_count-1. Parallel edges carry
/// distinct ids.
struct Multigraph {
  int vertex_count = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error(ErrorCode::invalid_multifan, "edge endpoint out of range");
    }
    edges.push_back({u, v, static_cast<int>(edges.size())});
  }

  std::string str() const {
    std::string out = std::to_string(vertex_count) + " vertices;";
    for (const auto& e : edges) {
      out += " (" + std::to_string(e.u) + "," + std::to_string(e.v) + "," + std::to_string(e.id) + ")";
    }
    return out;
  }
};

/// Vertex 0 is the hub x, then v_1 followed by the d_1 - 1 inner vertices of
/// the first segment, v_2, and so on.
inline Multigraph expand(const MultiFan& f) {
  int vertices = 1 + f.spine_length();
  for (int len : f.d()) vertices += len - 1;
  Multigraph g;
  g.vertex_count = vertices;
  int spine = 1;
  int next = 2;
  for (int i = 0; i < f.spine_length(); ++i) {
    for (int k = 0; k < f.c()[static_cast<std::size_t>(i)]; ++k) g.add_edge(0, spine);
    if (i + 1 == f.spine_length()) break;
    int prev = spine;
    for (int k = 0; k < f.d()[static_cast<std::size_t>(i)]; ++k) {
      int cur = next++;
      g.add_edge(prev, cur);
      prev = cur;
    }
    spine = prev;
  }
  return g;
}

namespace detail {

inline std::vector<std::vector<int>> adjacency(const Multigraph& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count));
  for (const auto& e : g.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

inline bool is_connected_graph(const Multigraph& g) {
  if (g.vertex_count <= 1) return true;
  auto adj = adjacency(g);
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.vertex_count;
}

}  // namespace detail

struct SpanningTreeCount {
  BigInt count;
  bool connected = true;
};

/// Matrix-tree theorem: determinant of the Laplacian with row and column 0
/// removed, by fraction-free (Bareiss) elimination.
inline SpanningTreeCount spanning_trees(const Multigraph& g) {
  if (!detail::is_connected_graph(g)) return {BigInt(0), false};
  const int n = g.vertex_count - 1;
  if (n <= 0) return {BigInt(1), true};
  std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n), 0));
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    for (int v : {e.u, e.v}) {
      if (v > 0) m[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(v - 1)] += 1;
    }
    if (e.u > 0 && e.v > 0) {
      m[static_cast<std::size_t>(e.u - 1)][static_cast<std::size_t>(e.v - 1)] -= 1;
      m[static_cast<std::size_t>(e.v - 1)][static_cast<std::size_t>(e.u - 1)] -= 1;
    }
  }
  BigInt prev_pivot = 1;
  int sign = 1;
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < static_cast<std::size_t>(n) && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == static_cast<std::size_t>(n)) return {BigInt(0), true};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < static_cast<std::size_t>(n); ++i) {
      for (std::size_t j = k + 1; j < static_cast<std::size_t>(n); ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev_pivot;
      }
    }
    prev_pivot = m[k][k];
  }
  BigInt det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
  return {sign < 0 ? BigInt(-det) : det, true};
}

/// alpha(F(c, d)) = 2 prod_j (2^{d_j + 1} - 1); independent of c.
inline BigInt acyclic_formula(const MultiFan& f) {
  BigInt out = 2;
  for (int len : f.d()) out *= pow2_minus_one(static_cast<unsigned>(len + 1));
  return out;
}

struct OrientationOptions {
  /// At most 2^cap orientations are enumerated.
  int cap = 20;
};

/// Acyclic orientations by enumeration. Parallel edges are oriented together
/// (any split bundle is a directed 2-cycle), so one bit per parallel class.
inline BigInt acyclic_bruteforce(const Multigraph& g, const OrientationOptions& options = {}) {
  std::map<std::pair<int, int>, int> class_index;
  std::vector<std::pair<int, int>> classes;
  for (const auto& e : g.edges) {
    if (e.u == e.v) return 0;
    auto key = std::minmax(e.u, e.v);
    if (class_index.try_emplace(key, static_cast<int>(classes.size())).second) classes.push_back(key);
  }
  const int k = static_cast<int>(classes.size());
  if (k > options.cap) {
    throw Error(ErrorCode::cap_exceeded, std::to_string(k) + " parallel classes exceed the orientation cap", k);
  }
  const auto n = static_cast<std::size_t>(g.vertex_count);
  std::uint64_t acyclic = 0;
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n);
  std::vector<int> queue;
  queue.reserve(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    for (auto& list : out) list.clear();
    std::fill(indegree.begin(), indegree.end(), 0);
    for (int i = 0; i < k; ++i) {
      auto [a, b] = classes[static_cast<std::size_t>(i)];
      if (bits >> i & 1U) std::swap(a, b);
      out[static_cast<std::size_t>(a)].push_back(b);
      ++indegree[static_cast<std::size_t>(b)];
    }
    // Kahn: acyclic iff every vertex gets removed.
    queue.clear();
    for (std::size_t v = 0; v < n; ++v) {
      if (indegree[v] == 0) queue.push_back(static_cast<int>(v));
    }
    std::size_t head = 0;
    while (head < queue.size()) {
      int v = queue[head++];
      for (int w : out[static_cast<std::size_t>(v)]) {
        if (--indegree[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
      }
    }
    if (queue.size() == n) ++acyclic;
  }
  return BigInt(acyclic);
}

/// Orientations in which every edge lies on a directed cycle, i.e. every
/// connected component is strongly connected. One bit per edge.
inline BigInt totally_cyclic_bruteforce(const Multigraph& g, const OrientationOptions& options = {}) {
  const int m = g.edge_count();
  if (m > options.cap) {
    throw Error(ErrorCode::cap_exceeded, std::to_string(m) + " edges exceed the orientation cap", m);
  }
  const auto n = static_cast<std::size_t>(g.vertex_count);
  // Weak components fixed up front; each must be reachable both ways from its root.
  std::vector<int> component(n, -1);
  std::vector<int> roots;
  {
    auto adj = detail::adjacency(g);
    for (std::size_t r = 0; r < n; ++r) {
      if (component[r] != -1) continue;
      int id = static_cast<int>(roots.size());
      roots.push_back(static_cast<int>(r));
      std::vector<int> stack{static_cast<int>(r)};
      component[r] = id;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
          if (component[static_cast<std::size_t>(w)] == -1) {
            component[static_cast<std::size_t>(w)] = id;
            stack.push_back(w);
          }
        }
      }
    }
  }
  std::vector<std::vector<int>> fwd(n);
  std::vector<std::vector<int>> bwd(n);
  std::vector<char> seen(n);
  std::vector<int> stack;
  auto covers_all = [&](const std::vector<std::vector<int>>& adj) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int root : roots) {
      stack.assign(1, root);
      seen[static_cast<std::size_t>(root)] = 1;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
          if (!seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            stack.push_back(w);
          }
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  };
  std::uint64_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    for (std::size_t v = 0; v < n; ++v) {
      fwd[v].clear();
      bwd[v].clear();
    }
    for (int i = 0; i < m; ++i) {
      int a = g.edges[static_cast<std::size_t>(i)].u;
      int b = g.edges[static_cast<std::size_t>(i)].v;
      if (bits >> i & 1U) std::swap(a, b);
      fwd[static_cast<std::size_t>(a)].push_back(b);
      bwd[static_cast<std::size_t>(b)].push_back(a);
    }
    if (covers_all(fwd) && covers_all(bwd)) ++count;
  }
  return BigInt(count);
}

struct GraphTutteOptions {
  int edge_cap = 16;
};

namespace detail {

// Symmetric multiplicity matrix of a loopless multigraph.
using Multiplicities = std::vector<std::vector<int>>;

inline BivariatePolynomial geometric_y(int terms) {
  BivariatePolynomial out;
  for (int i = 0; i < terms; ++i) out.add_term(0, i, 1);
  return out;
}

inline bool reachable_without(const Multiplicities& mult, int from, int to) {
  std::vector<char> seen(mult.size(), 0);
  std::vector<int> stack{from};
  seen[static_cast<std::size_t>(from)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (std::size_t w = 0; w < mult.size(); ++w) {
      if (seen[w] || mult[static_cast<std::size_t>(v)][w] == 0) continue;
      if ((v == from && static_cast<int>(w) == to) || (v == to && static_cast<int>(w) == from)) continue;
      seen[w] = 1;
      stack.push_back(static_cast<int>(w));
    }
  }
  return false;
}

inline Multiplicities merge_vertices(const Multiplicities& mult, int keep, int gone) {
  Multiplicities out;
  const auto n = mult.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<int>(i) == gone) continue;
    std::vector<int> row;
    for (std::size_t j = 0; j < n; ++j) {
      if (static_cast<int>(j) == gone) continue;
      int v = mult[i][j];
      if (static_cast<int>(i) == keep && static_cast<int>(j) != keep) v += mult[static_cast<std::size_t>(gone)][j];
      if (static_cast<int>(j) == keep && static_cast<int>(i) != keep) v += mult[i][static_cast<std::size_t>(gone)];
      if (i == j) v = 0;
      row.push_back(v);
    }
    out.push_back(std::move(row));
  }
  return out;
}

// Deletion-contraction over whole parallel classes: for a class of k edges
// between u and v, T = T(G - class) + (1 + y + ... + y^{k-1}) T(G / class),
// or (x + y + ... + y^{k-1}) T(G / class) when the class is a cut.
inline BivariatePolynomial graph_tutte_rec(const Multiplicities& mult) {
  const auto n = mult.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      int k = mult[u][v];
      if (k == 0) continue;
      auto contracted = graph_tutte_rec(merge_vertices(mult, static_cast<int>(u), static_cast<int>(v)));
      if (!reachable_without(mult, static_cast<int>(u), static_cast<int>(v))) {
        auto factor = BivariatePolynomial::x() + geometric_y(k) + BivariatePolynomial::constant(-1);
        return factor * contracted;
      }
      Multiplicities removed = mult;
      removed[u][v] = removed[v][u] = 0;
      return graph_tutte_rec(removed) + geometric_y(k) * contracted;
    }
  }
  return BivariatePolynomial::constant(1);
}

}  // namespace detail

/// Tutte polynomial of a multigraph by deletion and contraction. Self-loops
/// contribute a factor y each.
inline BivariatePolynomial graph_tutte(const Multigraph& g, const GraphTutteOptions& options = {}) {
  if (g.edge_count() > options.edge_cap) {
    throw Error(ErrorCode::cap_exceeded, std::to_string(g.edge_count()) + " edges exceed the deletion-contraction cap",
                g.edge_count());
  }
  detail::Multiplicities mult(static_cast<std::size_t>(g.vertex_count),
                              std::vector<int>(static_cast<std::size_t>(g.vertex_count), 0));
  int loops = 0;
  for (const auto& e : g.edges) {
    if (e.u == e.v) {
      ++loops;
      continue;
    }
    ++mult[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)];
    ++mult[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)];
  }
  return detail::graph_tutte_rec(mult) * BivariatePolynomial::monomial(0, loops, 1);
}

}  // namespace lpm
