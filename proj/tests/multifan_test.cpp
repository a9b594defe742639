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

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lpmtutte/lpmtutte.hpp"
#include "oracles.hpp"

namespace lpm {
namespace {

const BivariatePolynomial X = BivariatePolynomial::x();
const BivariatePolynomial Y = BivariatePolynomial::y();

Multigraph graph(int vertices, std::initializer_list<std::pair<int, int>> edges) {
  Multigraph g;
  g.vertex_count = vertices;
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

// Graph rank of an edge subset: vertices minus components, by union-find.
int graph_rank(const Multigraph& g, std::uint32_t mask) {
  std::vector<int> parent(static_cast<std::size_t>(g.vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent[static_cast<std::size_t>(v)] == v ? v : parent[static_cast<std::size_t>(v)] = find(parent[static_cast<std::size_t>(v)]);
  };
  int rank = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!(mask >> i & 1U)) continue;
    int a = find(g.edges[static_cast<std::size_t>(i)].u);
    int b = find(g.edges[static_cast<std::size_t>(i)].v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      ++rank;
    }
  }
  return rank;
}

BivariatePolynomial graph_subset_sum(const Multigraph& g) {
  const int m = g.edge_count();
  const int full = graph_rank(g, (1U << m) - 1);
  // Coefficients of (x-1)^a (y-1)^b, expanded at the end.
  std::map<std::pair<int, int>, long long> counts;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    int r = graph_rank(g, mask);
    ++counts[{full - r, std::popcount(mask) - r}];
  }
  BivariatePolynomial out;
  auto xm = X + BivariatePolynomial::constant(-1);
  auto ym = Y + BivariatePolynomial::constant(-1);
  for (auto [key, c] : counts) out = out + BivariatePolynomial::constant(c) * pow(xm, key.first) * pow(ym, key.second);
  return out;
}

long long spanning_tree_bruteforce(const Multigraph& g) {
  long long count = 0;
  for (std::uint32_t mask = 0; mask < (1U << g.edge_count()); ++mask) {
    if (std::popcount(mask) == g.vertex_count - 1 && graph_rank(g, mask) == g.vertex_count - 1) ++count;
  }
  return count;
}

TEST(MultiFan, ValidationAndParsing) {
  EXPECT_THROW(MultiFan({}, {}), Error);
  EXPECT_THROW(MultiFan({1, 1}, {}), Error);
  EXPECT_THROW(MultiFan({0}, {}), Error);
  EXPECT_THROW(MultiFan({1, 1}, {0}), Error);
  MultiFan f({2, 1}, {2});
  EXPECT_EQ(f.edge_count(), 5);
  EXPECT_EQ(f.str(), "F(c=2,1;d=2)");
  EXPECT_EQ(MultiFan({3}, {}).str(), "F(c=3)");
  EXPECT_EQ(parse_multifan("F(c=2,1;d=2)"), f);
  EXPECT_EQ(parse_multifan("f( d=2 ; c=2,1 )"), f);
  EXPECT_EQ(parse_multifan("F(c=3)"), MultiFan({3}, {}));
  EXPECT_EQ(parse_multifan("F(c=3;d=)"), MultiFan({3}, {}));
  EXPECT_THROW(parse_multifan("F(d=2)"), Error);
  EXPECT_THROW(parse_multifan("F(c=2,x)"), Error);
  EXPECT_THROW(parse_multifan("G(c=1)"), Error);
}

TEST(FanFromSnake, Examples) {
  EXPECT_EQ(fan_from_snake(SnakeComposition({1})), MultiFan({2}, {}));
  EXPECT_EQ(fan_from_snake(SnakeComposition({4})), MultiFan({5}, {}));
  EXPECT_EQ(fan_from_snake(SnakeComposition({2, 3})), MultiFan({2, 1}, {2}));
  EXPECT_EQ(fan_from_snake(SnakeComposition({2, 3, 4})), MultiFan({2, 4}, {2}));
  EXPECT_EQ(fan_from_snake(SnakeComposition({2, 3, 4, 5})), MultiFan({2, 3, 1}, {2, 4}));
  for (const auto& s : oracle::snakes_up_to(20)) EXPECT_EQ(fan_from_snake(s).edge_count(), s.element_count());
}

TEST(FanFromDualSnake, Examples) {
  EXPECT_EQ(fan_from_dual_snake(SnakeComposition({2, 3})), MultiFan({1, 3}, {1}));
  EXPECT_EQ(fan_from_dual_snake(SnakeComposition({1, 2})), MultiFan({3}, {}));
  EXPECT_EQ(fan_from_dual_snake(SnakeComposition({1})), MultiFan({2}, {}));
  EXPECT_EQ(fan_from_dual_snake(SnakeComposition({3})), MultiFan({1, 1}, {2}));
}

TEST(FanFromDualSnake, MatchesFanOfDualSnake) {
  for (const auto& s : oracle::snakes_up_to(16)) {
    EXPECT_EQ(fan_from_dual_snake(s), fan_from_snake(snake_dual(s))) << s.str();
  }
}

TEST(Expand, Examples) {
  auto g = expand(MultiFan({2, 1}, {2}));
  EXPECT_EQ(g.vertex_count, 4);
  EXPECT_EQ(g.str(), "4 vertices; (0,1,0) (0,1,1) (1,2,2) (2,3,3) (0,3,4)");
  auto single = expand(MultiFan({3}, {}));
  EXPECT_EQ(single.vertex_count, 2);
  EXPECT_EQ(single.edge_count(), 3);
  auto unit = expand(MultiFan({1, 1}, {1}));
  EXPECT_EQ(unit.str(), "3 vertices; (0,1,0) (1,2,1) (0,2,2)");
}

TEST(SpanningTrees, Examples) {
  EXPECT_EQ(spanning_trees(graph(3, {{0, 1}, {1, 2}, {0, 2}})).count, 3);
  EXPECT_EQ(spanning_trees(graph(2, {{0, 1}, {0, 1}, {0, 1}})).count, 3);
  EXPECT_EQ(spanning_trees(graph(1, {})).count, 1);
  auto split = spanning_trees(graph(3, {{0, 1}}));
  EXPECT_FALSE(split.connected);
  EXPECT_EQ(split.count, 0);
}

TEST(SpanningTrees, SeriesSegmentRegression) {
  // The d-segment is a path in series; reading it as a parallel bundle gives 8.
  EXPECT_EQ(spanning_trees(expand(MultiFan({2, 1}, {2}))).count, 7);
  EXPECT_EQ(spanning_trees(graph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}})).count, 8);
}

TEST(SpanningTrees, MatchBruteForceAndSnakeBases) {
  for (const auto& s : oracle::snakes_up_to(14)) {
    auto g = expand(fan_from_snake(s));
    auto trees = spanning_trees(g).count;
    ASSERT_EQ(trees, spanning_tree_bruteforce(g)) << s.str();
    ASSERT_EQ(trees, bases_recursive(s)) << s.str();
  }
}

TEST(Orientations, Examples) {
  auto triangle = graph(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(acyclic_bruteforce(triangle), 6);
  EXPECT_EQ(totally_cyclic_bruteforce(triangle), 2);
  auto fan = expand(MultiFan({2, 1}, {2}));
  EXPECT_EQ(acyclic_formula(MultiFan({2, 1}, {2})), 14);
  EXPECT_EQ(acyclic_bruteforce(fan), 14);
  EXPECT_EQ(totally_cyclic_bruteforce(fan), 6);
  auto s1 = expand(fan_from_snake(SnakeComposition({1})));
  EXPECT_EQ(acyclic_bruteforce(s1), 2);
  EXPECT_EQ(totally_cyclic_bruteforce(s1), 2);
  EXPECT_EQ(acyclic_bruteforce(graph(1, {{0, 0}})), 0);
}

TEST(Orientations, CapIsEnforced) {
  auto big = expand(MultiFan({1, 1}, {12}));
  EXPECT_THROW(totally_cyclic_bruteforce(big, OrientationOptions{10}), Error);
  EXPECT_THROW(acyclic_bruteforce(big, OrientationOptions{10}), Error);
}

TEST(Orientations, FormulaMatchesBruteForce) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    int ell = 1 + static_cast<int>(rng() % 4);
    std::vector<int> c;
    std::vector<int> d;
    for (int i = 0; i < ell; ++i) c.push_back(1 + static_cast<int>(rng() % 3));
    for (int i = 0; i + 1 < ell; ++i) d.push_back(1 + static_cast<int>(rng() % 3));
    MultiFan f(c, d);
    EXPECT_EQ(acyclic_formula(f), acyclic_bruteforce(expand(f))) << f.str();
  }
}

TEST(Orientations, MatchTutteEvaluations) {
  for (const auto& s : oracle::snakes_up_to(10)) {
    auto g = expand(fan_from_snake(s));
    ASSERT_EQ(acyclic_bruteforce(g), eval20(s)) << s.str();
    ASSERT_EQ(totally_cyclic_bruteforce(g), eval02(s)) << s.str();
  }
}

TEST(GraphTutte, Examples) {
  EXPECT_EQ(graph_tutte(graph(2, {{0, 1}, {0, 1}})), X + Y);
  EXPECT_EQ(graph_tutte(graph(3, {{0, 1}, {1, 2}, {0, 2}})), X * X + X + Y);
  EXPECT_EQ(graph_tutte(graph(2, {{0, 1}})), X);
  EXPECT_EQ(graph_tutte(graph(1, {{0, 0}})), Y);
  EXPECT_EQ(graph_tutte(graph(3, {})), BivariatePolynomial::constant(1));
  EXPECT_THROW(graph_tutte(expand(MultiFan({1, 1}, {16}))), Error);
}

TEST(GraphTutte, MatchesSubsetSumOnRandomGraphs) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 80; ++trial) {
    Multigraph g;
    g.vertex_count = 2 + static_cast<int>(rng() % 4);
    int m = static_cast<int>(rng() % 9);
    for (int i = 0; i < m; ++i) g.add_edge(static_cast<int>(rng() % g.vertex_count), static_cast<int>(rng() % g.vertex_count));
    ASSERT_EQ(graph_tutte(g), graph_subset_sum(g)) << g.str();
  }
}

TEST(GraphTutte, FanGraphsCarryTheSnakeMatroid) {
  for (const auto& s : oracle::snakes_up_to(10)) {
    ASSERT_EQ(graph_tutte(expand(fan_from_snake(s))), tutte_lpm(snake_diagram(s))) << s.str();
  }
}

}  // namespace
}  // namespace lpm
