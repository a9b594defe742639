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

#include <sstream>
#include <string>
#include <vector>

#include "lpmtutte/diagram.hpp"

namespace lpm {

namespace detail {

struct EdgeSets {
  // horizontal[y][x]: edge (x,y)-(x+1,y); vertical[y][x]: edge (x,y)-(x,y+1).
  std::vector<std::vector<char>> horizontal;
  std::vector<std::vector<char>> vertical;
};

inline void mark_path(const LatticePath& path, EdgeSets& edges) {
  int x = 0;
  int y = 0;
  for (Step s : path.steps()) {
    if (s == Step::east) {
      edges.horizontal[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
      ++x;
    } else {
      edges.vertical[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
      ++y;
    }
  }
}

// Sides of region cells together with the edges of P and Q.
inline EdgeSets drawn_edges(const LpmDiagram& d) {
  const auto m = static_cast<std::size_t>(d.width());
  const auto r = static_cast<std::size_t>(d.height());
  EdgeSets edges{std::vector<std::vector<char>>(r + 1, std::vector<char>(m, 0)),
                 std::vector<std::vector<char>>(r, std::vector<char>(m + 1, 0))};
  for (std::size_t y = 0; y < r; ++y) {
    for (std::size_t x = 0; x < m; ++x) {
      if (!d.contains_cell(static_cast<int>(x), static_cast<int>(y))) continue;
      edges.horizontal[y][x] = edges.horizontal[y + 1][x] = 1;
      edges.vertical[y][x] = edges.vertical[y][x + 1] = 1;
    }
  }
  mark_path(d.lower(), edges);
  mark_path(d.upper(), edges);
  return edges;
}

}  // namespace detail

/// Box drawing with '+', '-' and '|' on the (m+1) x (r+1) lattice, north up.
inline std::string draw_ascii(const LpmDiagram& d) {
  const int m = d.width();
  const int r = d.height();
  const auto edges = detail::drawn_edges(d);
  const auto cols = static_cast<std::size_t>(4 * m + 1);
  std::vector<std::string> canvas(static_cast<std::size_t>(2 * r + 1), std::string(cols, ' '));
  auto row_of = [r](int y) { return static_cast<std::size_t>(2 * (r - y)); };
  for (int y = 0; y <= r; ++y) {
    for (int x = 0; x < m; ++x) {
      if (!edges.horizontal[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]) continue;
      auto& line = canvas[row_of(y)];
      line[static_cast<std::size_t>(4 * x)] = '+';
      line.replace(static_cast<std::size_t>(4 * x + 1), 3, "---");
      line[static_cast<std::size_t>(4 * x + 4)] = '+';
    }
  }
  for (int y = 0; y < r; ++y) {
    for (int x = 0; x <= m; ++x) {
      if (!edges.vertical[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]) continue;
      canvas[row_of(y) - 1][static_cast<std::size_t>(4 * x)] = '|';
      canvas[row_of(y)][static_cast<std::size_t>(4 * x)] = '+';
      canvas[row_of(y + 1)][static_cast<std::size_t>(4 * x)] = '+';
    }
  }
  std::string out;
  for (auto& line : canvas) {
    line.erase(line.find_last_not_of(' ') + 1);
    out += line + "\n";
  }
  return out;
}

/// Standalone SVG: region cells shaded, P in red, Q in blue.
inline std::string draw_svg(const LpmDiagram& d) {
  constexpr int kCell = 40;
  constexpr int kMargin = 20;
  const int m = d.width();
  const int r = d.height();
  const int width = 2 * kMargin + m * kCell;
  const int height = 2 * kMargin + r * kCell;
  auto px = [&](int x) { return kMargin + x * kCell; };
  auto py = [&](int y) { return kMargin + (r - y) * kCell; };
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
     << "  <title>" << d.canonical() << "</title>\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n"
     << "  <g fill=\"#dde8f5\" stroke=\"#8a9bb0\" stroke-width=\"1\">\n";
  for (int y = 0; y < r; ++y) {
    for (int x = 0; x < m; ++x) {
      if (!d.contains_cell(x, y)) continue;
      os << "    <rect x=\"" << px(x) << "\" y=\"" << py(y + 1) << "\" width=\"" << kCell << "\" height=\"" << kCell
         << "\"/>\n";
    }
  }
  os << "  </g>\n";
  auto polyline = [&](const LatticePath& path, const char* colour, const char* name) {
    int x = 0;
    int y = 0;
    os << "  <polyline class=\"" << name << "\" fill=\"none\" stroke=\"" << colour
       << "\" stroke-width=\"3\" points=\"" << px(x) << "," << py(y);
    for (Step s : path.steps()) {
      if (s == Step::east) {
        ++x;
      } else {
        ++y;
      }
      os << " " << px(x) << "," << py(y);
    }
    os << "\"/>\n";
  };
  polyline(d.lower(), "#c0392b", "lower");
  polyline(d.upper(), "#2c6fbb", "upper");
  os << "</svg>\n";
  return os.str();
}

}  // namespace lpm
