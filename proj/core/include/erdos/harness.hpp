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

// Seeded sampling of finite-support points and the property suites that
// exercise ball containment, the closedness and openness certificates, the
// O neighbourhoods, and the witness constructions on sampled inputs.
//
// Sampling is a pure function of (config, draw): each draw owns a
// std::mt19937_64 seeded with SplitMix64(seed XOR SplitMix64(draw)), and
// bounded integers are drawn by rejection so no library distribution
// (whose output is implementation-defined) is involved. Draws may run on
// several threads; reports are assembled in draw order.

#ifndef ERDOS_HARNESS_HPP_
#define ERDOS_HARNESS_HPP_

#include <chrono>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "erdos/clopen.hpp"
#include "erdos/json.hpp"
#include "erdos/space.hpp"

namespace erdos {

struct SampleConfig {
  std::uint64_t max_support = 6;
  Index max_index = 12;
  std::uint64_t max_numerator = 8;
  std::uint64_t max_denominator = 8;
  std::uint64_t seed = 42;
  std::uint64_t count = 10000;
  std::uint64_t count_inner = 16;

  /// Throws kInvalidParams unless every cap is at least 1 (max_support may
  /// be 0).
  void Validate() const;
};

std::uint64_t SplitMix64(std::uint64_t x);

class DrawRng {
 public:
  DrawRng(std::uint64_t seed, std::uint64_t draw);

  std::uint64_t Next() { return engine_(); }
  /// Uniform on [lo, hi], inclusive.
  std::uint64_t Uniform(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Support size uniform in [0, max_support], distinct indices in
/// [1, max_index], coordinates +-p/q with 1 <= p <= max_numerator and
/// 1 <= q <= max_denominator.
Point SamplePoint(const SampleConfig& config, DrawRng& rng);
/// The point of draw number `draw` (< config.count).
Point SamplePoint(const SampleConfig& config, std::uint64_t draw);

/// base + c * d for a sampled direction d, with c chosen so that
/// ||c * d|| < bound: c = bound * t / u where u > ||d|| is rational and
/// t in (0, 1).
Point PerturbWithin(const Point& base, const Rational& bound, const SampleConfig& config, DrawRng& rng);

enum class ClaimId { kBall, kClosed, kOpen, kIntersection, kWitness, kRemark };

/// "C1".."C5", "Remark".
std::string_view ClaimName(ClaimId id);
/// Accepts "1".."5" and "remark" as well as the names above.
ClaimId ParseClaimId(std::string_view text);
std::vector<ClaimId> AllClaims();

struct Violation {
  std::uint64_t draw = 0;
  std::string check;
  Json detail;
};

struct ClaimReport {
  ClaimId claim = ClaimId::kBall;
  std::uint64_t samples_run = 0;
  std::uint64_t eligible = 0;
  std::vector<Violation> violations;
  std::chrono::milliseconds elapsed{0};
  SampleConfig config;
  Json params;

  bool passed() const { return violations.empty(); }
};

using ClaimParams = std::variant<AlphaBetaPair, Schedule>;

struct RunOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Runs one claim over config.count draws. C1-C3 take a pair or a schedule
/// (draw d then uses the schedule pair with n = 1 + d mod 3); C4, C5 and the
/// remark need a schedule. Throws kInvalidParams otherwise.
ClaimReport VerifyClaim(ClaimId claim, const ClaimParams& params, const SampleConfig& config,
                        const RunOptions& options = {});

std::vector<ClaimReport> RunSuite(const Schedule& schedule, const SampleConfig& config,
                                  const std::vector<ClaimId>& claims = AllClaims(), const RunOptions& options = {});

Json ToJson(const SampleConfig& config);
/// elapsed_ms is emitted only with include_timing, so reports without it are
/// a pure function of (params, config).
Json ToJson(const ClaimReport& report, bool include_timing);
Json ToJson(const std::vector<ClaimReport>& reports, bool include_timing);

}  // namespace erdos

#endif  // ERDOS_HARNESS_HPP_
