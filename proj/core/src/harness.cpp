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

#include "erdos/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <set>
#include <thread>

#include "erdos/detail/search.hpp"
#include "erdos/witness.hpp"

namespace erdos {

void SampleConfig::Validate() const {
  if (max_index < 1 || max_numerator < 1 || max_denominator < 1) {
    throw Error(ErrorCode::kInvalidParams, "sample caps max_index, max_numerator, max_denominator must be >= 1");
  }
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

DrawRng::DrawRng(std::uint64_t seed, std::uint64_t draw) : engine_(SplitMix64(seed ^ SplitMix64(draw))) {}

std::uint64_t DrawRng::Uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == UINT64_MAX) return Next();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % range + 1) % range;
  std::uint64_t v;
  do {
    v = Next();
  } while (v > limit);
  return lo + v % range;
}

namespace {

Rational FromU64(std::uint64_t v) { return Rational(mpz_class(std::to_string(v)), 1); }

}  // namespace

Point SamplePoint(const SampleConfig& config, DrawRng& rng) {
  const std::uint64_t cap = std::min<std::uint64_t>(config.max_support, config.max_index);
  const std::uint64_t size = rng.Uniform(0, cap);
  std::set<Index> indices;
  while (indices.size() < size) indices.insert(rng.Uniform(1, config.max_index));
  Point::Coords coords;
  for (Index k : indices) {
    const bool negative = rng.Uniform(0, 1) == 1;
    const std::uint64_t p = rng.Uniform(1, config.max_numerator);
    const std::uint64_t q = rng.Uniform(1, config.max_denominator);
    Rational v = FromU64(p) / FromU64(q);
    coords.emplace(k, negative ? -v : v);
  }
  return Point::FromCoords(std::move(coords));
}

Point SamplePoint(const SampleConfig& config, std::uint64_t draw) {
  config.Validate();
  if (draw >= config.count) {
    throw Error(ErrorCode::kInvalidParams, "draw " + std::to_string(draw) + " is not below count " +
                                               std::to_string(config.count));
  }
  DrawRng rng(config.seed, draw);
  return SamplePoint(config, rng);
}

namespace {

// A rational strictly above sqrt(s) for s >= 0: (floor(sqrt(p q)) + 1) / q.
Rational SqrtUpper(const Rational& s) {
  return Rational(FloorSqrt(s.num() * s.den()) + 1, s.den());
}

Point ScaleInto(const Point& d, const Rational& bound, DrawRng& rng) {
  const Rational t = FromU64(rng.Uniform(1, 1023)) / Rational(1024);
  const Rational c = bound * t / SqrtUpper(NormSq(d));
  return Scale(c, d);
}

Point NonZeroDirection(const SampleConfig& config, DrawRng& rng) {
  Point d = SamplePoint(config, rng);
  if (d.is_zero()) d = Point::Unit(rng.Uniform(1, config.max_index));
  return d;
}

}  // namespace

Point PerturbWithin(const Point& base, const Rational& bound, const SampleConfig& config, DrawRng& rng) {
  return Add(base, ScaleInto(NonZeroDirection(config, rng), bound, rng));
}

std::string_view ClaimName(ClaimId id) {
  switch (id) {
    case ClaimId::kBall: return "C1";
    case ClaimId::kClosed: return "C2";
    case ClaimId::kOpen: return "C3";
    case ClaimId::kIntersection: return "C4";
    case ClaimId::kWitness: return "C5";
    case ClaimId::kRemark: return "Remark";
  }
  return "Unknown";
}

ClaimId ParseClaimId(std::string_view text) {
  static constexpr std::pair<std::string_view, ClaimId> kNames[] = {
      {"1", ClaimId::kBall},         {"C1", ClaimId::kBall},         {"2", ClaimId::kClosed},
      {"C2", ClaimId::kClosed},      {"3", ClaimId::kOpen},          {"C3", ClaimId::kOpen},
      {"4", ClaimId::kIntersection}, {"C4", ClaimId::kIntersection}, {"5", ClaimId::kWitness},
      {"C5", ClaimId::kWitness},     {"remark", ClaimId::kRemark},   {"Remark", ClaimId::kRemark},
  };
  for (const auto& [name, id] : kNames) {
    if (name == text) return id;
  }
  throw Error(ErrorCode::kInvalidParams, "unknown claim \"" + std::string(text) + "\"; expected 1-5 or remark");
}

std::vector<ClaimId> AllClaims() {
  return {ClaimId::kBall, ClaimId::kClosed, ClaimId::kOpen, ClaimId::kIntersection, ClaimId::kWitness,
          ClaimId::kRemark};
}

// ---------------------------------------------------------------------------
// Per-draw checks

namespace {

struct DrawOutcome {
  bool eligible = false;
  std::vector<Violation> violations;
};

struct DrawContext {
  const SampleConfig& config;
  const ClaimParams& params;
  std::uint64_t draw;
  DrawRng rng;
  DrawOutcome out;

  void Fail(std::string check, Json detail) { out.violations.push_back({draw, std::move(check), std::move(detail)}); }
};

AlphaBetaPair PairFor(const ClaimParams& params, std::uint64_t draw) {
  if (const auto* pair = std::get_if<AlphaBetaPair>(&params)) return *pair;
  return std::get<Schedule>(params).pair_at(1 + draw % 3);
}

const Schedule& ScheduleOf(const ClaimParams& params) { return std::get<Schedule>(params); }

Json PairDetail(const AlphaBetaPair& pair) { return ToJson(pair); }

void CheckBall(DrawContext& ctx) {
  const AlphaBetaPair pair = PairFor(ctx.params, ctx.draw);
  const Point x = SamplePoint(ctx.config, ctx.rng);
  const RootValue alpha_sq = pair.alpha().Squared();
  std::vector<Point> candidates;
  if (CompareToRoot(NormSq(x), alpha_sq) == std::strong_ordering::less) candidates.push_back(x);
  if (!x.is_zero()) {
    const Rational radius = LargestRationalBelow(RootExpr(pair.alpha()), mpz_class(1000000));
    candidates.push_back(ScaleInto(x, radius, ctx.rng));
  }
  ctx.out.eligible = true;
  for (const Point& p : candidates) {
    if (CompareToRoot(NormSq(p), alpha_sq) != std::strong_ordering::less) {
      ctx.Fail("scaled point inside B(0, alpha)", Json{{"point", ToJson(p)}, {"pair", PairDetail(pair)}});
      continue;
    }
    Trace trace;
    if (!InA(p, pair, &trace)) {
      ctx.Fail("B(0, alpha) inside A", Json{{"point", ToJson(p)}, {"pair", PairDetail(pair)}, {"trace", trace}});
    }
  }
}

// Samples count_inner points within the certificate bound and checks that
// `member` returns `expected` on each.
void CheckNeighbourhood(DrawContext& ctx, const Point& centre, const RadiusCertificate& cert, bool expected,
                        const std::function<bool(const Point&, Trace*)>& member, const Json& params) {
  if (!VerifyCertificate(cert)) {
    ctx.Fail("certificate bound positive and below every component",
             Json{{"centre", ToJson(centre)}, {"certificate", ToJson(cert)}, {"params", params}});
    return;
  }
  const Rational bound_sq = cert.bound * cert.bound;
  for (std::uint64_t i = 0; i < ctx.config.count_inner; ++i) {
    const Point y = PerturbWithin(centre, cert.bound, ctx.config, ctx.rng);
    if (!(DistanceSq(y, centre) < bound_sq)) {
      ctx.Fail("perturbation inside certified radius",
               Json{{"centre", ToJson(centre)}, {"perturbed", ToJson(y)}, {"bound", cert.bound.str()}});
      continue;
    }
    Trace trace;
    if (member(y, &trace) != expected) {
      ctx.Fail(std::string("membership preserved within ") + std::string(CertificateKindName(cert.kind)),
               Json{{"centre", ToJson(centre)},
                    {"perturbed", ToJson(y)},
                    {"inner", i},
                    {"certificate", ToJson(cert)},
                    {"params", params},
                    {"trace", trace}});
    }
  }
}

void CheckClosed(DrawContext& ctx) {
  const AlphaBetaPair pair = PairFor(ctx.params, ctx.draw);
  const Point z = SamplePoint(ctx.config, ctx.rng);
  if (InA(z, pair)) return;
  ctx.out.eligible = true;
  const RadiusCertificate cert = ClosednessRadius(z, pair);
  CheckNeighbourhood(
      ctx, z, cert, false, [&](const Point& y, Trace* t) { return InA(y, pair, t); }, PairDetail(pair));
}

void CheckOpen(DrawContext& ctx) {
  const AlphaBetaPair pair = PairFor(ctx.params, ctx.draw);
  const Point x = SamplePoint(ctx.config, ctx.rng);
  if (!InA(x, pair)) return;
  ctx.out.eligible = true;
  const RadiusCertificate cert = OpennessRadius(x, pair);
  CheckNeighbourhood(
      ctx, x, cert, true, [&](const Point& y, Trace* t) { return InA(y, pair, t); }, PairDetail(pair));
}

void CheckIntersection(DrawContext& ctx) {
  const Schedule& s = ScheduleOf(ctx.params);
  ctx.out.eligible = true;
  if (ctx.draw == 0) {
    Trace trace;
    if (!InO(Point(), s, &trace)) ctx.Fail("0 in O", Json{{"trace", trace}});
  }
  Point x = SamplePoint(ctx.config, ctx.rng);
  // Odd draws shrink the point so that members of O are well represented.
  if (ctx.draw % 2 == 1) x = Scale(Rational(1) / FromU64(ctx.rng.Uniform(1, 8)), x);

  const std::uint64_t horizon = OHorizon(x, s);
  const bool member = InOUpTo(x, s, horizon);
  if (member != InOUpTo(x, s, horizon + 10)) {
    ctx.Fail("finite horizon decides O", Json{{"point", ToJson(x)}, {"horizon", horizon}});
  }
  const Json params = ToJson(s);
  if (member) {
    const RadiusCertificate cert = OOpennessRadius(x, s);
    CheckNeighbourhood(
        ctx, x, cert, true, [&](const Point& y, Trace* t) { return InO(y, s, t); }, params);
  } else {
    const std::uint64_t n = FirstFailingIndex(x, s);
    const RadiusCertificate cert = ClosednessRadius(x, s.pair_at(n));
    CheckNeighbourhood(
        ctx, x, cert, false, [&](const Point& y, Trace* t) { return InO(y, s, t); }, params);
  }
}

// k * direction + offset for the least k whose norm exceeds the threshold.
PointSource OffsetRay(Point offset, Point direction) {
  return [offset = std::move(offset), direction = std::move(direction)](const RootValue& t) -> std::optional<Point> {
    auto at = [&](std::uint64_t k) { return Add(offset, Scale(FromU64(k), direction)); };
    auto k = detail::LeastTrue([&](std::uint64_t k) { return NormExceeds(at(k), t); });
    if (!k) return std::nullopt;
    return at(*k);
  };
}

PointSource RandomUnboundedSource(const SampleConfig& config, DrawRng& rng) {
  Point direction = NonZeroDirection(config, rng);
  if (rng.Uniform(0, 1) == 0) return RaySource(direction);
  return OffsetRay(SamplePoint(config, rng), direction);
}

void RecordWitness(DrawContext& ctx, const WitnessRecord& w, const Schedule& s) {
  for (const CheckResult& c : RecheckWitness(w, s)) {
    if (!c.holds) ctx.Fail(c.statement, Json{{"witness", ToJson(w)}, {"trace", c.trace}});
  }
  if (InO(w.z, s)) ctx.Fail("z not in O", Json{{"witness", ToJson(w)}});
}

void CheckWitness(DrawContext& ctx) {
  const Schedule& s = ScheduleOf(ctx.params);
  ctx.out.eligible = true;
  const Rational r_star = FromU64(ctx.rng.Uniform(1, ctx.config.max_numerator)) /
                          FromU64(ctx.rng.Uniform(1, ctx.config.max_denominator));
  const VSpec v(r_star, RandomUnboundedSource(ctx.config, ctx.rng));
  RecordWitness(ctx, ConstructWitness(v, s), s);
}

void CheckRemark(DrawContext& ctx) {
  const Schedule& s = ScheduleOf(ctx.params);
  ctx.out.eligible = true;
  const Rational eps = FromU64(ctx.rng.Uniform(1, ctx.config.max_numerator)) /
                       FromU64(ctx.rng.Uniform(1, 2 * ctx.config.max_denominator));
  RecordWitness(ctx, GeneralizedWitness(RandomUnboundedSource(ctx.config, ctx.rng), eps, s), s);
}

DrawOutcome RunDraw(ClaimId claim, const ClaimParams& params, const SampleConfig& config, std::uint64_t draw) {
  DrawContext ctx{config, params, draw, DrawRng(config.seed, draw), {}};
  try {
    switch (claim) {
      case ClaimId::kBall: CheckBall(ctx); break;
      case ClaimId::kClosed: CheckClosed(ctx); break;
      case ClaimId::kOpen: CheckOpen(ctx); break;
      case ClaimId::kIntersection: CheckIntersection(ctx); break;
      case ClaimId::kWitness: CheckWitness(ctx); break;
      case ClaimId::kRemark: CheckRemark(ctx); break;
    }
  } catch (const std::exception& e) {
    ctx.Fail("no exception", Json{{"what", e.what()}});
  }
  return std::move(ctx.out);
}

}  // namespace

ClaimReport VerifyClaim(ClaimId claim, const ClaimParams& params, const SampleConfig& config,
                        const RunOptions& options) {
  config.Validate();
  const bool needs_schedule =
      claim == ClaimId::kIntersection || claim == ClaimId::kWitness || claim == ClaimId::kRemark;
  if (needs_schedule && !std::holds_alternative<Schedule>(params)) {
    throw Error(ErrorCode::kInvalidParams, std::string(ClaimName(claim)) + " needs a schedule, not a single pair");
  }

  const auto start = std::chrono::steady_clock::now();
  std::vector<DrawOutcome> outcomes(config.count);
  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(config.count, 1)));
  if (threads <= 1) {
    for (std::uint64_t d = 0; d < config.count; ++d) outcomes[d] = RunDraw(claim, params, config, d);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        for (std::uint64_t d = next++; d < config.count; d = next++) {
          outcomes[d] = RunDraw(claim, params, config, d);
        }
      });
    }
    for (auto& w : workers) w.join();
  }

  ClaimReport report;
  report.claim = claim;
  report.samples_run = config.count;
  report.config = config;
  if (const auto* pair = std::get_if<AlphaBetaPair>(&params)) {
    report.params = Json{{"pair", ToJson(*pair)}};
  } else {
    report.params = Json{{"schedule", ToJson(std::get<Schedule>(params))}};
  }
  for (auto& o : outcomes) {
    if (o.eligible) ++report.eligible;
    for (auto& v : o.violations) report.violations.push_back(std::move(v));
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<ClaimReport> RunSuite(const Schedule& schedule, const SampleConfig& config,
                                  const std::vector<ClaimId>& claims, const RunOptions& options) {
  std::vector<ClaimReport> reports;
  for (ClaimId c : claims) reports.push_back(VerifyClaim(c, schedule, config, options));
  return reports;
}

Json ToJson(const SampleConfig& c) {
  return Json{{"max_support", c.max_support},         {"max_index", c.max_index}, {"max_numerator", c.max_numerator},
              {"max_denominator", c.max_denominator}, {"seed", c.seed},           {"count", c.count},
              {"count_inner", c.count_inner}};
}

Json ToJson(const ClaimReport& r, bool include_timing) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back(Json{{"draw", v.draw}, {"check", v.check}, {"detail", v.detail}});
  }
  Json out{{"claim", std::string(ClaimName(r.claim))},
           {"samples_run", r.samples_run},
           {"eligible", r.eligible},
           {"pass", r.passed()},
           {"violations", std::move(violations)},
           {"config", ToJson(r.config)},
           {"params", r.params}};
  if (r.eligible == 0) out["note"] = "no eligible base points";
  if (include_timing) out["elapsed_ms"] = r.elapsed.count();
  return out;
}

Json ToJson(const std::vector<ClaimReport>& reports, bool include_timing) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(ToJson(r, include_timing));
  return out;
}

}  // namespace erdos
