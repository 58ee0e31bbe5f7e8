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

#include <benchmark/benchmark.h>

#include "erdos/clopen.hpp"
#include "erdos/harness.hpp"
#include "erdos/witness.hpp"

namespace erdos {
namespace {

void BM_CompareToRoot(benchmark::State& state) {
  const Rational s(mpz_class(1393), mpz_class(985));
  const RootValue t = RootValue::Make(Rational(2), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(CompareToRoot(s, t));
}
BENCHMARK(BM_CompareToRoot)->Arg(2)->Arg(4);

void BM_CompareRootExpr(benchmark::State& state) {
  const RootExpr a{Term{Rational(1), std::nullopt}, Term{Rational(-1), RootValue::Make(Rational(1, 2), 2)}};
  const RootExpr b{Term{Rational(2), std::nullopt}, Term{Rational(-1), RootValue::Make(Rational(2), 4)}};
  for (auto _ : state) benchmark::DoNotOptimize(CompareRootExpr(a, b));
}
BENCHMARK(BM_CompareRootExpr);

void BM_ExactSignFourRadicals(benchmark::State& state) {
  const RootExpr e{Term{Rational(1), RootValue::Make(Rational(2), 4)}, Term{Rational(-1), RootValue::Make(Rational(3), 4)},
                   Term{Rational(1), RootValue::Make(Rational(5), 2)}, Term{Rational(-7, 4), std::nullopt}};
  for (auto _ : state) benchmark::DoNotOptimize(ExactSign(e));
}
BENCHMARK(BM_ExactSignFourRadicals);

void BM_InO(benchmark::State& state) {
  SampleConfig config;
  config.count = 1024;
  std::vector<Point> points;
  for (std::uint64_t d = 0; d < config.count; ++d) points.push_back(SamplePoint(config, d));
  const Schedule s = Schedule::Default();
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(InO(points[i++ % points.size()], s));
}
BENCHMARK(BM_InO);

void BM_OpennessRadius(benchmark::State& state) {
  const AlphaBetaPair pair = AlphaBetaPair::Make(RootValue::Make(Rational(2), 4), RootValue::Make(Rational(1, 2), 2));
  const Point x = Point::FromCoords({{1, 2}, {2, Rational(1, 2)}});
  for (auto _ : state) benchmark::DoNotOptimize(OpennessRadius(x, pair));
}
BENCHMARK(BM_OpennessRadius);

void BM_ConstructWitness(benchmark::State& state) {
  const Schedule s = Schedule::Default();
  const Rational r(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ConstructWitness(VSpec(r, RaySource(Point::Unit(1))), s));
}
BENCHMARK(BM_ConstructWitness)->Arg(1)->Arg(10)->Arg(1000);

}  // namespace
}  // namespace erdos

BENCHMARK_MAIN();
