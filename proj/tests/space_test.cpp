// Copyright 2026 The Erdos Clopen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "erdos/space.hpp"

#include <gtest/gtest.h>

#include "bridge.hpp"
#include "interval_oracle.hpp"
#include "random_points.hpp"

namespace erdos {
namespace {

Point P(std::initializer_list<std::pair<const Index, Rational>> coords) { return Point::FromCoords(coords); }

RootValue Alpha(const char* base) { return RootValue::Make(Rational::Parse(base), 4); }

TEST(Point, CanonicalForm) {
  Point p = P({{1, Rational(0)}, {3, Rational::Parse("2/4")}});
  EXPECT_EQ(p.support_size(), 1u);
  EXPECT_EQ(p.at(3).str(), "1/2");
  EXPECT_EQ(p.at(1).str(), "0/1");
  EXPECT_EQ(p.at(1000000).str(), "0/1");
  EXPECT_EQ(p.max_index(), 3u);
  EXPECT_FALSE(Point().max_index());
  EXPECT_THROW(P({{0, Rational(1)}}), Error);
}

TEST(NormSq, Examples) {
  EXPECT_EQ(NormSq(Point()), Rational(0));
  EXPECT_EQ(NormSq(P({{1, 3}, {2, 4}})), Rational(25));
  EXPECT_EQ(NormSq(P({{1, Rational::Parse("1/2")}, {2, Rational::Parse("1/3")}})).str(), "13/36");
}

TEST(NormSq, PartialAndTailSplitTheSum) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    Point x = testing::RandomPoint(rng);
    for (Index m = 0; m <= 11; ++m) {
      ASSERT_EQ(PartialNormSq(x, m) + TailNormSq(x, m + 1), NormSq(x));
    }
  }
}

TEST(Combine, Examples) {
  Point x = P({{1, 4}, {2, Rational::Parse("1/2")}});
  EXPECT_EQ(Add(x, Point()), x);
  Point half_e2 = Scale(Rational::Parse("1/2"), Point::Unit(2));
  EXPECT_EQ(half_e2.support_size(), 1u);
  EXPECT_EQ(half_e2.at(2).str(), "1/2");
  EXPECT_EQ(DistanceSq(x, P({{1, 4}})).str(), "1/4");
}

TEST(Combine, Algebra) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    Point x = testing::RandomPoint(rng);
    Point y = testing::RandomPoint(rng);
    Rational c = testing::RandomRational(rng, 5, 5);
    ASSERT_EQ(Add(x, y), Add(y, x));
    ASSERT_TRUE(Subtract(x, x).is_zero());
    ASSERT_TRUE(Scale(Rational(0), x).is_zero());
    ASSERT_EQ(Subtract(Add(x, y), y), x);
    ASSERT_EQ(NormSq(Scale(c, x)), c * c * NormSq(x));
    ASSERT_EQ(DistanceSq(x, y), NormSq(Subtract(x, y)));
    const Point sum = Add(x, y);
    for (const auto& [k, v] : sum.coords()) ASSERT_FALSE(v.is_zero()) << k;
  }
}

TEST(MIndex, Examples) {
  EXPECT_FALSE(MIndex(Point(), Alpha("2")));
  EXPECT_EQ(MIndex(P({{1, 2}}), Alpha("2")), 1u);
  EXPECT_EQ(oracle::MIndexScan(oracle::ToCoords(P({{1, 2}})), 2, 20), 1u);
  EXPECT_EQ(MIndex(P({{1, 1}, {2, 1}}), Alpha("2")), 2u);
  EXPECT_EQ(oracle::MIndexScan(oracle::ToCoords(P({{1, 1}, {2, 1}})), 2, 20), 2u);
  EXPECT_THROW(MIndex(P({{1, 2}}), RootValue::Make(Rational(2), 2)), Error);
}

TEST(MIndex, SkipsGapsInTheSupport) {
  // Partial sums only change at support indices.
  EXPECT_EQ(MIndex(P({{1, 1}, {9, 1}}), Alpha("2")), 9u);
  EXPECT_EQ(MIndex(P({{1000000000000ULL, 2}}), Alpha("2")), 1000000000000ULL);
}

TEST(MIndex, AgreesWithScanAndNorm) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 2000; ++i) {
    Point x = testing::RandomPoint(rng);
    Rational base = testing::RandomNonSquare(rng, 200, 10);
    RootValue alpha = RootValue::Make(base, 4);
    auto m = MIndex(x, alpha);
    ASSERT_EQ(m, oracle::MIndexScan(oracle::ToCoords(x), base.get(), 12)) << base.str();
    // exists iff ||x||^2 > alpha^2
    ASSERT_EQ(m.has_value(), NormExceeds(x, alpha));
    ASSERT_EQ(m.has_value(), oracle::CompareRationalToRoot(NormSq(x).get(), base.get(), 2) > 0);
  }
}

TEST(MIndex, MonotoneInAlpha) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 2000; ++i) {
    Point x = testing::RandomPoint(rng);
    RootValue a = RootValue::Make(testing::RandomNonSquare(rng, 100, 10), 4);
    RootValue b = RootValue::Make(testing::RandomNonSquare(rng, 100, 10), 4);
    if (CompareRootExpr(a, b) == std::strong_ordering::greater) std::swap(a, b);
    auto ma = MIndex(x, a);
    auto mb = MIndex(x, b);
    if (mb) {
      ASSERT_TRUE(ma.has_value());
    }
    if (ma && mb) {
      ASSERT_LE(*ma, *mb);
    }
  }
}

}  // namespace
}  // namespace erdos
