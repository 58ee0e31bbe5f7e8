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

#include <string>

namespace erdos {

Point Point::FromCoords(Coords coords) {
  Point p;
  for (auto& [k, v] : coords) {
    if (k == 0) throw Error(ErrorCode::kInvalidInput, "point indices are 1-based; index 0 is not allowed");
    if (!v.is_zero()) p.coords_.emplace(k, std::move(v));
  }
  return p;
}

Point Point::Unit(Index l) { return FromCoords({{l, Rational(1)}}); }

Rational Point::at(Index k) const {
  auto it = coords_.find(k);
  return it == coords_.end() ? Rational(0) : it->second;
}

std::optional<Index> Point::max_index() const {
  if (coords_.empty()) return std::nullopt;
  return coords_.rbegin()->first;
}

Rational NormSq(const Point& x) {
  mpq_class sum = 0;
  for (const auto& [k, v] : x.coords()) sum += v.get() * v.get();
  return Rational(sum);
}

Rational PartialNormSq(const Point& x, Index m) {
  mpq_class sum = 0;
  for (auto it = x.coords().begin(); it != x.coords().end() && it->first <= m; ++it) {
    sum += it->second.get() * it->second.get();
  }
  return Rational(sum);
}

Rational TailNormSq(const Point& x, Index l) {
  mpq_class sum = 0;
  for (auto it = x.coords().lower_bound(l); it != x.coords().end(); ++it) {
    sum += it->second.get() * it->second.get();
  }
  return Rational(sum);
}

Point Add(const Point& x, const Point& y) {
  Point::Coords out = x.coords();
  for (const auto& [k, v] : y.coords()) {
    auto [it, inserted] = out.emplace(k, v);
    if (!inserted) it->second += v;
  }
  return Point::FromCoords(std::move(out));
}

Point Scale(const Rational& c, const Point& x) {
  if (c.is_zero()) return Point();
  Point::Coords out;
  for (const auto& [k, v] : x.coords()) out.emplace(k, c * v);
  return Point::FromCoords(std::move(out));
}

Point Subtract(const Point& x, const Point& y) { return Add(x, Scale(Rational(-1), y)); }

Rational DistanceSq(const Point& x, const Point& y) { return NormSq(Subtract(x, y)); }

bool NormExceeds(const Point& x, const RootValue& t) {
  const Rational s = NormSq(x);
  if (t.degree() == 2) return s > t.base();
  return CompareToRoot(s, t.Squared()) == std::strong_ordering::greater;
}

std::optional<Index> MIndex(const Point& x, const RootValue& alpha) {
  if (alpha.degree() != 4) {
    throw Error(ErrorCode::kInvalidParams,
                "m-index threshold must be a fourth root so its square is irrational, got " + alpha.str());
  }
  const RootValue alpha_sq = alpha.Squared();
  mpq_class sum = 0;
  for (const auto& [k, v] : x.coords()) {
    sum += v.get() * v.get();
    if (CompareToRoot(Rational(sum), alpha_sq) == std::strong_ordering::greater) return k;
  }
  return std::nullopt;
}

}  // namespace erdos
