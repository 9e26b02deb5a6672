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

#include <cmath>

#include "oracles.hpp"
#include "richdist/errors.hpp"
#include "richdist/interval.hpp"

namespace richdist {
namespace {

CycloNum zeta(long n, long e = 1) { return CycloNum::zeta_power(cyclotomic_field(n), e); }
CycloNum rat(long n, long v) { return CycloNum::rational(cyclotomic_field(n), v); }

TEST(Interval, PentagonSideSquared) {
  const CycloNum side = rat(5, 2) - zeta(5) - zeta(5, 4);
  const ComplexBox box = eval_interval(side, 80);
  // (5 - sqrt 5) / 2 = 1.38196601125010515179...
  const double want = 1.3819660112501051;
  EXPECT_LE(box.re.lower_bound(), std::nextafter(want, 2.0));
  EXPECT_GE(box.re.upper_bound(), std::nextafter(want, 1.0));
  EXPECT_LT(box.re.width(), 1e-20);
  EXPECT_NEAR(box.re.midpoint(), 1.3819660112501051, 1e-15);
  EXPECT_TRUE(box.im.contains(0.0));
}

TEST(Interval, Zeta4BoxIsTight) {
  const ComplexBox box = eval_interval(zeta(4), 60);
  EXPECT_TRUE(box.re.contains(0.0));
  EXPECT_TRUE(box.im.contains(1.0));
  EXPECT_LT(box.re.width(), std::ldexp(1.0, -50));
  EXPECT_LT(box.im.width(), std::ldexp(1.0, -50));
}

TEST(Interval, WidthShrinksWithPrecision) {
  const CycloNum a = zeta(7) + zeta(7, 3) * rat(7, 5);
  double last = 1.0;
  for (long bits : {32, 64, 128, 256}) {
    const ComplexBox box = eval_interval(a, bits);
    EXPECT_LT(box.re.width(), last);
    EXPECT_LT(box.re.width(), std::ldexp(1.0, -static_cast<int>(bits) + 8));
    last = box.re.width();
  }
}

TEST(Interval, ContainsLongDoubleImage) {
  std::mt19937_64 rng(11);
  for (long n = 1; n <= 40; ++n) {
    const auto a = testing::random_element(rng, cyclotomic_field(n));
    const auto z = testing::to_complex(a);
    const ComplexBox box = eval_interval(a, 40);
    EXPECT_LE(box.re.lower_bound(), static_cast<double>(z.real()) + 1e-15) << n;
    EXPECT_GE(box.re.upper_bound(), static_cast<double>(z.real()) - 1e-15) << n;
  }
}

TEST(Interval, RejectsTinyPrecision) { EXPECT_THROW(eval_interval(zeta(3), 8), std::invalid_argument); }

TEST(CompareReal, PentagonSideBelowDiagonal) {
  const CycloNum side = rat(5, 2) - zeta(5) - zeta(5, 4);
  const CycloNum diagonal = rat(5, 2) - zeta(5, 2) - zeta(5, 3);
  EXPECT_EQ(compare_real(side, diagonal), std::strong_ordering::less);
  EXPECT_EQ(compare_real(diagonal, side), std::strong_ordering::greater);
  EXPECT_EQ(compare_real(side, side), std::strong_ordering::equal);
}

TEST(CompareReal, SeparatesVeryCloseValues) {
  // 2 cos(2 pi / 60) against a rational just below it.
  const CycloNum c = zeta(60) + zeta(60, 59);
  const auto f = cyclotomic_field(60);
  const CycloNum below = CycloNum::rational(f, Rational(1989043790736546, 1000000000000000));
  EXPECT_EQ(compare_real(below, c), std::strong_ordering::less);
}

TEST(CompareReal, RejectsNonReal) {
  EXPECT_THROW(compare_real(zeta(5), rat(5, 1)), NotRealError);
  EXPECT_THROW(compare_real(rat(5, 1), zeta(5)), NotRealError);
}

}  // namespace
}  // namespace richdist
