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

#include <cstdlib>

#include "oracles.hpp"
#include "richdist/constructions.hpp"
#include "richdist/errors.hpp"
#include "richdist/spectrum.hpp"

namespace richdist {
namespace {

using testing::float_spectrum;

std::vector<std::size_t> multiplicities(const DistanceSpectrum& s) {
  std::vector<std::size_t> out;
  for (const auto& c : s.classes) out.push_back(c.multiplicity);
  return out;
}

TEST(Spectrum, Square) {
  const auto s = distance_spectrum(regular_ngon(4));
  ASSERT_EQ(s.classes.size(), 2u);
  EXPECT_EQ(s.total_pairs, 6u);
  EXPECT_EQ(multiplicities(s), (std::vector<std::size_t>{4, 2}));
  EXPECT_EQ(s.classes[0].value.to_string(), "2");
  EXPECT_EQ(s.classes[1].value.to_string(), "4");
  EXPECT_EQ(s.classes[0].witnesses.front(), IndexPair(0, 1));
  EXPECT_EQ(s.classes[1].witnesses.front(), IndexPair(0, 2));
}

TEST(Spectrum, HexagonAgainstFloatOracle) {
  const PointSet hex = regular_ngon(6);
  const auto s = distance_spectrum(hex);
  const auto approx = float_spectrum(testing::complex_points(hex));
  ASSERT_EQ(approx.size(), 3u);
  std::vector<std::size_t> want;
  for (const auto& [v, m] : approx) want.push_back(m);
  EXPECT_EQ(want, (std::vector<std::size_t>{6, 6, 3}));
  EXPECT_EQ(multiplicities(s), (std::vector<std::size_t>{6, 6, 3}));
  EXPECT_EQ(rich_classes(s, 6), 2u);
  EXPECT_EQ(rich_classes(s, 3), 3u);
  EXPECT_EQ(rich_classes(s, 7), 0u);
  EXPECT_THROW(rich_classes(s, 0), std::invalid_argument);
}

TEST(Spectrum, WorkerCountDoesNotChangeResult) {
  const Construction c = build_theorem2(40, 2);
  const auto one = distance_spectrum(c.points, {.witness_cap = SIZE_MAX, .workers = 1});
  for (unsigned w : {2u, 3u, 7u}) {
    const auto many = distance_spectrum(c.points, {.witness_cap = SIZE_MAX, .workers = w});
    ASSERT_EQ(many.classes.size(), one.classes.size());
    for (std::size_t i = 0; i < one.classes.size(); ++i) {
      EXPECT_EQ(many.classes[i].value, one.classes[i].value);
      EXPECT_EQ(many.classes[i].witnesses, one.classes[i].witnesses);
    }
  }
}

TEST(Spectrum, WitnessCapKeepsMultiplicity) {
  const auto s = distance_spectrum(regular_ngon(9), {.witness_cap = 2, .workers = 0});
  for (const auto& c : s.classes) {
    EXPECT_EQ(c.multiplicity, 9u);
    EXPECT_EQ(c.witnesses.size(), 2u);
  }
}

TEST(Spectrum, HashMatchesPairwiseOnSmallSets) {
  for (int s = 3; s <= 12; ++s) {
    const PointSet ps = regular_ngon(s);
    EXPECT_TRUE(testing::same_grouping(distance_spectrum(ps), testing::pairwise_classes(ps))) << s;
  }
}

TEST(RegularPolygon, ClassCounts) {
  EXPECT_EQ(regular_polygon_class_count(4), 1u);
  EXPECT_EQ(regular_polygon_class_count(5), 2u);
  EXPECT_EQ(regular_polygon_class_count(6), 2u);
  for (int m = 3; m <= 30; ++m) {
    const auto s = distance_spectrum(regular_ngon(m));
    EXPECT_EQ(rich_classes(s, m), static_cast<std::size_t>((m - 1) / 2)) << m;
    EXPECT_EQ(s.classes.size(), static_cast<std::size_t>(m / 2)) << m;
  }
}

TEST(Diameter, SquareAndHexagon) {
  const Diameter sq = diameter_multiplicity(regular_ngon(4));
  EXPECT_EQ(sq.value.to_string(), "4");
  EXPECT_EQ(sq.multiplicity, 2u);
  const Diameter hex = diameter_multiplicity(regular_ngon(6));
  EXPECT_EQ(hex.value.to_string(), "4");
  EXPECT_EQ(hex.multiplicity, 3u);
  // Odd polygons: every vertex has two farthest neighbours.
  EXPECT_EQ(diameter_multiplicity(regular_ngon(7)).multiplicity, 7u);
  const auto f = cyclotomic_field(1);
  EXPECT_THROW(diameter_multiplicity(PointSet::from_points(f, {CycloNum(f)})), TooFewPointsError);
}

TEST(Stats, Heptagon) {
  const auto st = spectrum_stats(distance_spectrum(regular_ngon(7)));
  EXPECT_EQ(st.point_count, 7u);
  EXPECT_EQ(st.total_pairs, 21u);
  EXPECT_EQ(st.distinct, 3u);
  EXPECT_EQ(st.max_multiplicity, 7u);
  EXPECT_EQ(st.histogram, (std::map<std::size_t, std::size_t>{{7, 3}}));
  EXPECT_EQ(st.at_most_n_classes, 3u);
}

TEST(Report, KeyValueIsStable) {
  const auto s = distance_spectrum(regular_ngon(4));
  const std::string kv = format_report(s, ReportFormat::key_value, true);
  EXPECT_NE(kv.find("points=4\n"), std::string::npos);
  EXPECT_NE(kv.find("pairs=6\n"), std::string::npos);
  EXPECT_NE(kv.find("distinct=2\n"), std::string::npos);
  EXPECT_NE(kv.find("class.0.multiplicity=4\n"), std::string::npos);
  EXPECT_NE(kv.find("class.1.value=4\n"), std::string::npos);
  EXPECT_NE(kv.find("histogram.4=1\n"), std::string::npos);
  EXPECT_EQ(kv, format_report(distance_spectrum(regular_ngon(4)), ReportFormat::key_value, true));
  const std::string text = format_report(s, ReportFormat::text, false);
  EXPECT_NE(text.find("first pair (0, 2)"), std::string::npos);
}

}  // namespace
}  // namespace richdist
