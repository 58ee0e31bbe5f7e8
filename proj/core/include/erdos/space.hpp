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

// Points of Erdos space with finite support.
//
// A Point stores only its nonzero rational coordinates, keyed by 1-based
// index. Finite-support rational sequences are dense in Erdos space and every
// membership predicate restricted to them is exactly decidable; points with
// infinite support are not representable.

#ifndef ERDOS_SPACE_HPP_
#define ERDOS_SPACE_HPP_

#include <cstdint>
#include <map>
#include <optional>

#include "erdos/exact.hpp"

namespace erdos {

using Index = std::uint64_t;

class Point {
 public:
  using Coords = std::map<Index, Rational>;

  Point() = default;

  /// Drops zero coordinates. Index 0 is rejected (indices start at 1).
  static Point FromCoords(Coords coords);
  static Point Unit(Index l);

  const Coords& coords() const { return coords_; }
  Rational at(Index k) const;
  bool is_zero() const { return coords_.empty(); }
  std::size_t support_size() const { return coords_.size(); }
  std::optional<Index> max_index() const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  Coords coords_;
};

Rational NormSq(const Point& x);
/// Sum of x_k^2 over k <= m.
Rational PartialNormSq(const Point& x, Index m);
/// Sum of x_k^2 over k >= l.
Rational TailNormSq(const Point& x, Index l);

Point Add(const Point& x, const Point& y);
Point Subtract(const Point& x, const Point& y);
Point Scale(const Rational& c, const Point& x);
Rational DistanceSq(const Point& x, const Point& y);

/// Exact test of ||x|| > t.
bool NormExceeds(const Point& x, const RootValue& t);

/// Least m with sum_{k<=m} x_k^2 > alpha^2, or nullopt when no partial sum
/// gets there. alpha must be a fourth root so alpha^2 is irrational and ties
/// cannot occur. Only support indices can be the answer.
std::optional<Index> MIndex(const Point& x, const RootValue& alpha);

}  // namespace erdos

#endif  // ERDOS_SPACE_HPP_
