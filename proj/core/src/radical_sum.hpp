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

#ifndef ERDOS_SRC_RADICAL_SUM_HPP_
#define ERDOS_SRC_RADICAL_SUM_HPP_

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "erdos/exact.hpp"

namespace erdos::detail {

// coeff * radicand^(1/4) with radicand a positive integer. Every Term maps to
// one of these: sqrt(p/q) = (p^2 q^2)^(1/4) / q and (p/q)^(1/4) = (p q^3)^(1/4) / q.
struct Radical {
  mpq_class coeff;
  mpz_class radicand;
};

// Sum of radicals with pairwise rationally independent radicands, so the sum
// is zero iff it has no terms.
class RadicalSum {
 public:
  RadicalSum() = default;
  explicit RadicalSum(const RootExpr& e);

  void Add(const mpq_class& coeff, const mpz_class& radicand);
  void Add(const Term& term);

  const std::vector<Radical>& radicals() const { return radicals_; }
  bool is_zero() const { return radicals_.empty(); }

  int Sign() const;
  // lo <= value <= hi, computed with integer fourth roots at 2^-bits scale.
  std::pair<mpq_class, mpq_class> Bracket(unsigned bits) const;

 private:
  std::vector<Radical> radicals_;
};

}  // namespace erdos::detail

#endif  // ERDOS_SRC_RADICAL_SUM_HPP_
