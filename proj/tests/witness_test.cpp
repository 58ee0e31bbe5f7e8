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

#include "erdos/witness.hpp"

#include <gtest/gtest.h>

#include "bridge.hpp"
#include "interval_oracle.hpp"
#include "random_points.hpp"

namespace erdos {
namespace {

Point P(std::initializer_list<std::pair<const Index, Rational>> coords) { return Point::FromCoords(coords); }

// Independent re-check of a witness: everything except the record's own
// check list, decided with the interval oracle.
void ExpectOracleConfirms(const WitnessRecord& w, const Schedule& s) {
  const mpq_class alpha_scale = s.alpha_scale().get();
  const mpq_class beta_scale = s.beta_scale().get();
  const mpq_class m = w.m_star;
  const mpq_class alpha_base = alpha_scale * m * m * m * m;
  const mpq_class beta_base = beta_scale / (m * m);
  const Rational& r = w.ball_radius;
  EXPECT_LT(w.q, r);
  EXPECT_GT(oracle::CompareRationalToRoot(w.q.get(), beta_base, 2), 0);
  EXPECT_LT(NormSq(w.y), r * r);
  EXPECT_EQ(w.y.support_size(), 1u);
  EXPECT_EQ(w.y.at(w.l_star).abs(), w.q);
  EXPECT_EQ(w.z, Add(w.x, w.y));
  // ||x|| > alpha_{m*}
  EXPECT_GT(oracle::CompareRationalToRoot(NormSq(w.x).get(), alpha_base, 2), 0);
  EXPECT_EQ(oracle::MIndexScan(oracle::ToCoords(w.x), alpha_base, w.l_star + 5), w.l_star - 1);
  EXPECT_FALSE(oracle::InA(oracle::ToCoords(w.z), alpha_base, beta_base));
  EXPECT_FALSE(oracle::InO(oracle::ToCoords(w.z), alpha_scale, beta_scale));
  EXPECT_TRUE(oracle::InO({}, alpha_scale, beta_scale));
  for (const auto& c : w.checks) EXPECT_TRUE(c.holds) << c.statement;
}

TEST(Witness, RayExample) {
  Schedule s = Schedule::Default();
  WitnessRecord w = ConstructWitness(VSpec(Rational(1), RaySource(Point::Unit(1))), s);
  EXPECT_EQ(w.n_star, 2u);
  EXPECT_EQ(w.m1, 3u);
  EXPECT_EQ(w.m2, 2u);
  EXPECT_EQ(w.m_star, 3u);
  EXPECT_EQ(w.x, P({{1, 4}}));
  EXPECT_EQ(w.l_star, 2u);
  EXPECT_EQ(w.q.str(), "1/2");
  EXPECT_EQ(w.z, P({{1, 4}, {2, Rational(1, 2)}}));
  EXPECT_EQ(w.sign_case, WitnessCase::kNonNegative);
  EXPECT_FALSE(InO(w.z, s));
  ExpectOracleConfirms(w, s);
}

TEST(Witness, PointBeyondSupportTakesTheNonNegativeBranch) {
  // l* is one past the m-index (7); x_8 = 0 so the sign rule picks +q.
  Schedule s = Schedule::Default();
  WitnessRecord w = ConstructWitness(VSpec(Rational(1), ListSource({P({{7, -5}})})), s);
  EXPECT_EQ(w.l_star, 8u);
  EXPECT_EQ(w.sign_case, WitnessCase::kNonNegative);
  EXPECT_EQ(w.z.at(8), w.q);
  EXPECT_EQ(w.z.at(7), Rational(-5));
  ExpectOracleConfirms(w, s);
}

TEST(Witness, NegativeBranch) {
  Schedule s = Schedule::Default();
  WitnessRecord w = ConstructWitness(VSpec(Rational(1), ListSource({P({{1, 4}, {2, -1}})})), s);
  EXPECT_EQ(w.l_star, 2u);
  EXPECT_EQ(w.sign_case, WitnessCase::kNegative);
  EXPECT_EQ(WitnessCaseName(w.sign_case), "Negative");
  EXPECT_EQ(w.y, Scale(-w.q, Point::Unit(2)));
  EXPECT_EQ(w.z.at(2), Rational(-1) - w.q);
  ExpectOracleConfirms(w, s);
}

TEST(Witness, InvalidSpec) {
  for (long r : {0L, -1L}) {
    try {
      VSpec(Rational(r), RaySource(Point::Unit(1)));
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidSpec);
    }
  }
  EXPECT_THROW(VSpec(Rational(1), PointSource()), Error);
}

TEST(Witness, BoundedSourceIsRejected) {
  try {
    ConstructWitness(VSpec(Rational(1), ListSource({P({{1, 1}}), P({{2, 3}})})), Schedule::Default());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSourceFailure);
  }
  EXPECT_THROW(ConstructWitness(VSpec(Rational(1), RaySource(Point::Unit(1), 3)), Schedule::Default()), Error);
}

TEST(Generalized, HalfEpsilonOnTheRay) {
  Schedule s = Schedule::Default();
  WitnessRecord w = GeneralizedWitness(RaySource(Point::Unit(1)), Rational(1, 2), s);
  ASSERT_EQ(w.x.support_size(), 1u);
  const Rational k = w.x.at(1);
  ASSERT_TRUE(k.is_integer());
  const mpq_class m = w.m_star;
  const mpq_class alpha_base = s.alpha_scale().get() * m * m * m * m;
  EXPECT_GT(oracle::CompareRationalToRoot(k.get(), alpha_base, 4), 0);
  EXPECT_LT(oracle::CompareRationalToRoot((k - Rational(1)).get(), alpha_base, 4), 0);
  ExpectOracleConfirms(w, s);
}

TEST(Generalized, SmallEpsilonNeedsALaterIndex) {
  Schedule s = Schedule::Default();
  WitnessRecord w = GeneralizedWitness(RaySource(Point::Unit(1)), Rational(1, 10), s);
  EXPECT_EQ(w.n_star, 11u);
  EXPECT_EQ(w.m1, 16u);
  EXPECT_GE(w.m_star, 15u);
  EXPECT_EQ(w.q.str(), "1/11");
  ExpectOracleConfirms(w, s);
}

TEST(Generalized, RejectsNonPositiveEpsilon) {
  try {
    GeneralizedWitness(RaySource(Point::Unit(1)), Rational(0), Schedule::Default());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidEpsilon);
  }
}

TEST(Witness, RandomSpecsAndSources) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> num(1, 20), den(1, 40);
  const Schedule schedules[] = {Schedule::Default(), Schedule::Make(Rational(3), Rational(5, 3))};
  for (int i = 0; i < 120; ++i) {
    const Schedule& s = schedules[i % 2];
    Rational r(mpz_class(num(rng)), mpz_class(den(rng)));
    Point dir;
    while (dir.is_zero()) dir = testing::RandomPoint(rng, 4, 9, 5, 4);
    WitnessRecord w = ConstructWitness(VSpec(r, RaySource(dir)), s);
    ExpectOracleConfirms(w, s);
    ASSERT_FALSE(::testing::Test::HasFailure()) << "r* = " << r.str();
  }
}

TEST(Witness, Deterministic) {
  auto run = [] {
    return ConstructWitness(VSpec(Rational(3, 7), RaySource(P({{2, 1}, {5, -3}}))), Schedule::Default());
  };
  WitnessRecord a = run();
  WitnessRecord b = run();
  EXPECT_EQ(a.z, b.z);
  EXPECT_EQ(a.q, b.q);
  EXPECT_EQ(a.checks.size(), b.checks.size());
}

TEST(Verdict, AllRechecksPass) {
  Verdict v = RefuteGroupCompatibility(VSpec(Rational(1), RaySource(Point::Unit(1))), Schedule::Default());
  EXPECT_TRUE(v.verified);
  EXPECT_FALSE(v.premises.empty());
  ASSERT_FALSE(v.rechecks.empty());
  EXPECT_EQ(v.rechecks.back().statement, "0 in O");
  for (const auto& c : v.rechecks) EXPECT_TRUE(c.holds) << c.statement;
  EXPECT_EQ(v.witness.q.str(), "1/2");
}

TEST(Verdict, WholeSpaceAsV) {
  // With V the whole space any unbounded source works; use a diagonal.
  Verdict v = RefuteGroupCompatibility(VSpec(Rational(1), RaySource(P({{1, 1}, {2, 1}, {3, 1}}))),
                                       Schedule::Default());
  EXPECT_TRUE(v.verified);
}

TEST(Verdict, WithheldForBoundedSource) {
  EXPECT_THROW(RefuteGroupCompatibility(VSpec(Rational(1), ListSource({})), Schedule::Default()), Error);
}

TEST(Recheck, DetectsTampering) {
  Schedule s = Schedule::Default();
  WitnessRecord w = ConstructWitness(VSpec(Rational(1), RaySource(Point::Unit(1))), s);
  w.z = w.x;
  bool any_failed = false;
  for (const auto& c : RecheckWitness(w, s)) any_failed = any_failed || !c.holds;
  EXPECT_TRUE(any_failed);
}

}  // namespace
}  // namespace erdos
