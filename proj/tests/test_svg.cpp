// Copyright 2026 The richdist Authors.
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

#include <regex>

#include "richdist/constructions.hpp"
#include "richdist/errors.hpp"
#include "richdist/svg.hpp"

namespace richdist {
namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

TEST(Svg, SquareMarkersAndEdges) {
  const std::string svg = render_svg(regular_ngon(4));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_EQ(count(svg, "<circle"), 4u);
  EXPECT_EQ(count(svg, "data-index="), 4u);
  EXPECT_EQ(count(svg, "<polygon"), 1u);
  EXPECT_EQ(count(svg, "stroke-dasharray"), 0u);
  // Four solid edges: one closed polygon through four vertices.
  const std::regex poly("<polygon points=\"([^\"]*)\"");
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, poly));
  EXPECT_EQ(count(m[1].str(), ","), 4u);
  EXPECT_NE(svg.find("width=\"640\""), std::string::npos);
}

TEST(Svg, CopiesAreDashed) {
  const Construction c = build_theorem1(10);
  const std::string svg = render_svg(c.points);
  EXPECT_EQ(count(svg, "<circle"), 10u);
  EXPECT_EQ(count(svg, "<polygon"), 2u);
  EXPECT_EQ(count(svg, "stroke-dasharray"), 1u);
}

TEST(Svg, HighlightGroupsHoldWholeClasses) {
  const PointSet hex = regular_ngon(6);
  SvgOptions opt;
  opt.edges = false;
  opt.highlight = 2;
  opt.labels = true;
  const std::string svg = render_svg(hex, opt);
  EXPECT_NE(svg.find("id=\"class-0\""), std::string::npos);
  EXPECT_NE(svg.find("id=\"class-1\""), std::string::npos);
  EXPECT_EQ(svg.find("id=\"class-2\""), std::string::npos);
  EXPECT_EQ(count(svg, "<line"), 12u);
  EXPECT_EQ(count(svg, "<polygon"), 0u);
  EXPECT_EQ(count(svg, "<text"), 6u);
}

TEST(Svg, ByteDeterministic) {
  const PointSet ps = build_theorem2(17, 2).points;
  SvgOptions opt;
  opt.highlight = 3;
  EXPECT_EQ(render_svg(ps, opt), render_svg(ps, opt));
  EXPECT_EQ(render_svg(ps).find("-0.000000"), std::string::npos);
}

TEST(Svg, EmptySetThrows) {
  EXPECT_THROW(render_svg(PointSet(cyclotomic_field(1))), EmptySetError);
}

}  // namespace
}  // namespace richdist
