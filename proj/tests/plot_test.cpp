// Copyright 2026 The groupcut Authors
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

#include "groupcut/plot.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "groupcut/constructions.hpp"

using groupcut::PeriodicPWL;
using groupcut::Rational;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(PlotCsv, ExactColumnsAndSamples) {
  const PeriodicPWL f = groupcut::pi_k(3, Rational(1, 2));
  const auto rows = parse_csv(groupcut::plot_csv(f, 5));
  ASSERT_EQ(rows[0], (std::vector<std::string>{"x", "value", "sample_x", "sample_value"}));
  ASSERT_EQ(rows.size(), 1 + std::max<std::size_t>(f.size(), 5));
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_EQ(Rational::parse(rows[i + 1][0]), f.breakpoints()[i]);
    EXPECT_EQ(Rational::parse(rows[i + 1][1]), f.values()[i]);
  }
  EXPECT_DOUBLE_EQ(std::stod(rows[5][2]), 1.0);
  EXPECT_DOUBLE_EQ(std::stod(rows[3][3]), f(Rational(1, 2)).to_double());
}

TEST(PlotCsv, PadsShortColumns) {
  const auto rows = parse_csv(groupcut::plot_csv(groupcut::gmi(Rational(1, 2)), 3));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[3][0], "");
  EXPECT_EQ(rows[3].size(), 4u);
  const auto few = parse_csv(groupcut::plot_csv(groupcut::pi_k(3, Rational(1, 2)), 0));
  EXPECT_EQ(few[1][2], "");
}

TEST(PlotSvg, DrawsPolylineAndMarkers) {
  const PeriodicPWL f = groupcut::pi_k(3, Rational(1, 2));
  const std::string svg = groupcut::plot_svg(f, "pi_3 <b=1/2>");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("<polyline"), std::string::npos);
  EXPECT_NE(svg.find("&lt;b=1/2&gt;"), std::string::npos);
  std::size_t circles = 0;
  for (std::size_t pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
  EXPECT_EQ(circles, f.size());
  EXPECT_NE(svg.find("<title>(1/16, 3/8)</title>"), std::string::npos);
}

TEST(PlotSvg, ConstantZeroIsFlat) {
  const std::string svg = groupcut::plot_svg(PeriodicPWL(), "zero");
  const auto start = svg.find("points=\"") + 8;
  const std::string points = svg.substr(start, svg.find('"', start) - start);
  std::istringstream in(points);
  std::string pt;
  std::set<std::string> ys;
  while (in >> pt) ys.insert(pt.substr(pt.find(',') + 1));
  EXPECT_EQ(ys.size(), 1u);
}
