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

// Construction of points z = x + y with x, y in a candidate neighbourhood V
// of 0 and z outside O, and the verdict that the clopen topology of Erdos
// space is not a group topology.
//
// V is described only by what the construction consumes: a radius r* with
// B(0, r*) inside V, and a source of points of V of arbitrarily large norm.
// Nothing here checks that a user-supplied V is actually clopen.
//
// The perturbation size q is taken in (beta_{m*}, r*). That interval is
// nonempty because beta_{m*} < 1/n* < r*, and |z_{l*}| > beta_{m*} is all the
// exclusion from A(alpha_{m*}, beta_{m*}) needs. A lower end of
// 1/beta_{m*} would leave the interval empty whenever r* <= 1.

#ifndef ERDOS_WITNESS_HPP_
#define ERDOS_WITNESS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "erdos/clopen.hpp"
#include "erdos/exact.hpp"
#include "erdos/space.hpp"

namespace erdos {

/// Given a threshold t, yields a point with norm greater than t, or nullopt
/// when it cannot. Must be deterministic for reproducible witnesses.
using PointSource = std::function<std::optional<Point>(const RootValue& threshold)>;

/// Multiples k * direction, k = 1, 2, ..., returning the first one whose norm
/// exceeds the threshold.
PointSource RaySource(Point direction, std::uint64_t max_multiple = std::uint64_t{1} << 40);

/// The first listed point whose norm exceeds the threshold.
PointSource ListSource(std::vector<Point> points);

class VSpec {
 public:
  /// Throws kInvalidSpec unless ball_radius > 0 and a source is given.
  VSpec(Rational ball_radius, PointSource source);

  const Rational& ball_radius() const { return ball_radius_; }
  const PointSource& source() const { return source_; }

 private:
  Rational ball_radius_;
  PointSource source_;
};

enum class WitnessCase { kNonNegative, kNegative };

std::string_view WitnessCaseName(WitnessCase c);

struct CheckResult {
  std::string statement;
  bool holds = false;
  std::string trace;
};

struct WitnessRecord {
  Rational ball_radius;
  Point x;
  Point y;
  Point z;
  std::uint64_t n_star = 0;
  std::uint64_t m1 = 0;
  std::uint64_t m2 = 0;
  std::uint64_t m_star = 0;
  Index l_star = 0;
  Rational q;
  WitnessCase sign_case = WitnessCase::kNonNegative;
  std::uint64_t failing_n = 0;
  std::vector<CheckResult> checks;
};

/// Builds the witness and verifies it. Throws kSourceFailure when the source
/// cannot exceed alpha_{m*}, kScheduleExhausted if the schedule never drops
/// below 1/n* or climbs above n*.
WitnessRecord ConstructWitness(const VSpec& v, const Schedule& s);

/// The same construction with r* = eps and x drawn from an unbounded set K,
/// so z lies in K + B(0, eps) but not in O. Throws kInvalidEpsilon for
/// eps <= 0.
WitnessRecord GeneralizedWitness(const PointSource& k_source, const Rational& eps, const Schedule& s);

/// Re-derives every property of a witness from its points alone:
/// ||y|| < r*, z = x + y, m_{z} <= m_{x} < l*, |z_{l*}| > beta_{m*},
/// z outside A(alpha_{m*}, beta_{m*}) and z outside O.
std::vector<CheckResult> RecheckWitness(const WitnessRecord& w, const Schedule& s);

struct Verdict {
  std::vector<std::string> premises;
  WitnessRecord witness;
  std::vector<CheckResult> rechecks;
  bool verified = false;
  std::string conclusion;
};

/// Assembles the refutation: every nonempty clopen V containing 0 is
/// unbounded, the witness shows V + V is not inside the clopen set O, so
/// the clopen topology fails the group-topology neighbourhood criterion.
Verdict RefuteGroupCompatibility(const VSpec& v, const Schedule& s);

}  // namespace erdos

#endif  // ERDOS_WITNESS_HPP_
