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

#include <algorithm>
#include <numeric>
#include <random>

#include "lpmtutte/lpmtutte.hpp"
#include "oracles.hpp"

namespace lpm {
namespace {

LpmDiagram D(const char* lower, const char* upper) { return LpmDiagram(parse_path(lower), parse_path(upper)); }

TEST(ParsePath, CountsSteps) {
  auto p = parse_path("EENN");
  EXPECT_EQ(p.east_count(), 2);
  EXPECT_EQ(p.north_count(), 2);
  EXPECT_EQ(p.north_positions(), (std::vector<int>{3, 4}));

  auto q = parse_path("nenNe");
  EXPECT_EQ(q.east_count(), 2);
  EXPECT_EQ(q.north_count(), 3);
  EXPECT_EQ(q.north_positions(), (std::vector<int>{1, 3, 4}));
}

TEST(ParsePath, RejectsForeignSymbolWithPosition) {
  try {
    parse_path("EXN");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_symbol);
    EXPECT_EQ(e.position(), 2);
  }
  EXPECT_THROW(parse_path(""), Error);
}

TEST(ParsePath, NorthPositionsRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 15);
    std::vector<Step> steps;
    for (int i = 0; i < n; ++i) steps.push_back(rng() % 2 ? Step::north : Step::east);
    LatticePath p(steps);
    auto positions = p.north_positions();
    EXPECT_EQ(LatticePath::from_north_positions(positions, n), p);
    EXPECT_EQ(parse_path(p.word()), p);
  }
}

TEST(LpmNew, ValidatesEndpointsAndDominance) {
  EXPECT_NO_THROW(lpm_new(parse_path("EENN"), parse_path("NNEE")));
  EXPECT_NO_THROW(lpm_new(parse_path("EENNN"), parse_path("NENNE")));
  try {
    lpm_new(parse_path("NNEE"), parse_path("EENN"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::dominance_violation);
    EXPECT_EQ(e.position(), 1);
  }
  try {
    lpm_new(parse_path("EEN"), parse_path("NNE"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::endpoint_mismatch);
  }
}

TEST(LpmNew, DominanceChecksAgree) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    int r = static_cast<int>(rng() % (n + 1));
    std::vector<Step> a(static_cast<std::size_t>(n), Step::east);
    std::vector<Step> b(static_cast<std::size_t>(n), Step::east);
    std::fill(a.begin(), a.begin() + r, Step::north);
    std::fill(b.begin(), b.begin() + r, Step::north);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    bool by_prefix = dominates_by_prefix(LatticePath(a), LatticePath(b));
    bool by_intervals = true;
    try {
      LpmDiagram(LatticePath(a), LatticePath(b));
    } catch (const Error&) {
      by_intervals = false;
    }
    EXPECT_EQ(by_prefix, by_intervals);
  }
}

TEST(Presentation, ReadsIntervals) {
  EXPECT_EQ(presentation(D("EENN", "NNEE")), (std::vector<Interval>{{1, 3}, {2, 4}}));
  EXPECT_EQ(presentation(D("EENNN", "NENNE")), (std::vector<Interval>{{1, 3}, {3, 4}, {4, 5}}));
  EXPECT_EQ(presentation(D("EEN", "NEE")), (std::vector<Interval>{{1, 3}}));
}

TEST(Rank, Examples) {
  auto u24 = D("EENN", "NNEE");
  std::vector<int> x12{1, 2};
  EXPECT_EQ(rank(u24, x12), 2);
  auto s23 = D("EENNN", "NENNE");
  EXPECT_EQ(rank(s23, x12), 1);
  EXPECT_EQ(rank(s23, std::vector<int>{}), 0);
  EXPECT_THROW(rank(s23, std::vector<int>{6}), Error);
}

TEST(Rank, GreedyEqualsMaximumMatchingOnAllSmallDiagrams) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& d : enumerate_diagrams(n, DiagramFilter::all)) {
      auto intervals = d.presentation();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        auto elements = oracle::mask_elements(mask);
        ASSERT_EQ(rank(d, elements), oracle::matching_rank(intervals, elements)) << d.canonical();
      }
    }
  }
}

TEST(Rank, GreedyEqualsMatchingOnRandomTenElementDiagrams) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto d = oracle::random_diagram(rng, 10);
    auto intervals = d.presentation();
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
      auto elements = oracle::mask_elements(mask);
      ASSERT_EQ(rank(d, elements), oracle::matching_rank(intervals, elements));
    }
  }
}

TEST(Rank, FullRankIsHeightAndDualRankIsWidth) {
  for (const auto& d : enumerate_diagrams(7, DiagramFilter::all)) {
    std::vector<int> all(static_cast<std::size_t>(d.size()));
    std::iota(all.begin(), all.end(), 1);
    EXPECT_EQ(rank(d, all), d.height());
    EXPECT_EQ(rank(dual(d), all), d.width());
  }
}

TEST(Dual, Examples) {
  auto u24 = D("EENN", "NNEE");
  EXPECT_EQ(dual(u24), u24);
  EXPECT_EQ(dual(D("EEN", "NEE")), D("ENN", "NNE"));  // S(2) -> S(1,2)
}

TEST(Dual, InvolutionSwapsLoopsAndColoops) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& d : enumerate_diagrams(n, DiagramFilter::all)) {
      auto dd = dual(d);
      EXPECT_EQ(dual(dd), d);
      EXPECT_EQ(loops(dd), coloops(d));
      EXPECT_EQ(coloops(dd), loops(d));
    }
  }
}

TEST(LoopsColoops, Examples) {
  auto shared = D("EN", "EN");
  EXPECT_EQ(loops(shared), std::vector<int>{1});
  EXPECT_EQ(coloops(shared), std::vector<int>{2});
  auto u24 = D("EENN", "NNEE");
  EXPECT_TRUE(loops(u24).empty());
  EXPECT_TRUE(coloops(u24).empty());
  auto d = D("ENE", "NEE");
  EXPECT_EQ(loops(d), std::vector<int>{3});
  EXPECT_TRUE(coloops(d).empty());
  EXPECT_EQ(rank(d, std::vector<int>{3}), 0);
}

TEST(LoopsColoops, AgreeWithRankOracle) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& d : enumerate_diagrams(n, DiagramFilter::all)) {
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 1);
      std::vector<int> expect_loops;
      std::vector<int> expect_coloops;
      for (int e = 1; e <= n; ++e) {
        if (rank(d, std::vector<int>{e}) == 0) expect_loops.push_back(e);
        std::vector<int> rest;
        for (int f : all) {
          if (f != e) rest.push_back(f);
        }
        if (rank(d, rest) < d.height()) expect_coloops.push_back(e);
      }
      EXPECT_EQ(loops(d), expect_loops) << d.canonical();
      EXPECT_EQ(coloops(d), expect_coloops) << d.canonical();
    }
  }
}

TEST(Components, Examples) {
  auto u24 = D("EENN", "NNEE");
  EXPECT_EQ(components(u24), std::vector<LpmDiagram>{u24});

  auto two_squares = D("ENEN", "NENE");
  auto parts = components(two_squares);
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[0], D("EN", "NE"));
  EXPECT_EQ(parts[1], D("EN", "NE"));

  auto single_loop = D("E", "E");
  ASSERT_EQ(components(single_loop).size(), 1U);
  EXPECT_EQ(loops(components(single_loop)[0]), std::vector<int>{1});
}

TEST(DirectSum, Examples) {
  auto s1 = D("EN", "NE");
  EXPECT_EQ(direct_sum(std::vector<LpmDiagram>{s1}), s1);
  EXPECT_EQ(direct_sum(std::vector<LpmDiagram>{s1, s1}), D("ENEN", "NENE"));
  auto triple = direct_sum(std::vector<LpmDiagram>{s1, s1, s1});
  EXPECT_EQ(triple.size(), 6);
  EXPECT_EQ(components(triple).size(), 3U);
}

TEST(DirectSum, InvertsComponents) {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& d : enumerate_diagrams(n, DiagramFilter::all)) {
      auto parts = components(d);
      EXPECT_EQ(direct_sum(parts), d);
      for (const auto& p : parts) EXPECT_TRUE(is_connected(p));
    }
  }
}

TEST(Pivot, Examples) {
  auto u24 = D("EENN", "NNEE");
  EXPECT_EQ(interior_points(u24), (std::vector<LatticePoint>{{1, 1}}));
  EXPECT_EQ(pivot_element(u24), 3);

  auto s23 = D("EENNN", "NENNE");
  EXPECT_TRUE(interior_points(s23).empty());
  try {
    pivot_element(s23);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_interior_point);
  }

  auto u25 = D("EEENN", "NNEEE");
  EXPECT_EQ(interior_points(u25), (std::vector<LatticePoint>{{1, 1}, {2, 1}}));
  EXPECT_EQ(pivot_element(u25), 4);
}

TEST(Pivot, InteriorPointsMatchCellCorners) {
  // A point is interior iff all four cells around it lie in the region.
  for (int n = 2; n <= 8; ++n) {
    for (const auto& d : enumerate_diagrams(n, DiagramFilter::all)) {
      std::vector<LatticePoint> expected;
      for (int y = 0; y <= d.height(); ++y) {
        for (int x = 0; x <= d.width(); ++x) {
          if (d.contains_cell(x - 1, y - 1) && d.contains_cell(x, y - 1) && d.contains_cell(x - 1, y) &&
              d.contains_cell(x, y)) {
            expected.push_back({x, y});
          }
        }
      }
      auto got = interior_points(d);
      std::sort(got.begin(), got.end());
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(got, expected) << d.canonical();
    }
  }
}

TEST(ParseDiagram, CanonicalForm) {
  auto d = parse_diagram(" p:eennn ; q:NENNE ");
  EXPECT_EQ(d, D("EENNN", "NENNE"));
  EXPECT_EQ(d.canonical(), "P:EENNN;Q:NENNE");
  EXPECT_EQ(parse_diagram("Q:NENNE;P:EENNN"), d);
  EXPECT_THROW(parse_diagram("P:EENNN"), Error);
  EXPECT_THROW(parse_diagram("P:EENNN;P:EENNN"), Error);
}

TEST(Families, UniformAndCatalan) {
  EXPECT_EQ(uniform_diagram(2, 2), D("EENN", "NNEE"));
  EXPECT_EQ(catalan_diagram(2), D("EENN", "NENE"));
}

}  // namespace
}  // namespace lpm
