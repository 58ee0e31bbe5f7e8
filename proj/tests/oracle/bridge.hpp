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

// Converts library values into the oracle's plain GMP inputs. Reads fields
// only; no library decision procedure is involved.

#ifndef ERDOS_TESTS_ORACLE_BRIDGE_HPP_
#define ERDOS_TESTS_ORACLE_BRIDGE_HPP_

#include <vector>

#include "erdos/exact.hpp"
#include "erdos/space.hpp"
#include "interval_oracle.hpp"

namespace erdos::oracle {

inline std::vector<OTerm> ToOracle(const RootExpr& e) {
  std::vector<OTerm> out;
  for (const Term& t : e.terms()) {
    if (t.root) {
      out.push_back(OTerm{t.coeff.get(), t.root->base().get(), t.root->degree()});
    } else {
      out.push_back(OTerm{t.coeff.get(), 1, 1});
    }
  }
  return out;
}

inline std::vector<OTerm> Difference(const RootExpr& a, const RootExpr& b) {
  std::vector<OTerm> out = ToOracle(a);
  for (OTerm t : ToOracle(b)) {
    t.coeff = -t.coeff;
    out.push_back(t);
  }
  return out;
}

inline Coords ToCoords(const Point& p) {
  Coords out;
  for (const auto& [k, v] : p.coords()) out.emplace(k, v.get());
  return out;
}

/// Oracle value of an expression for approximate assertions.
inline double Approx(const RootExpr& e) {
  auto [lo, hi] = Enclose(ToOracle(e), 256);
  return (lo + hi) / 2;
}

}  // namespace erdos::oracle

#endif  // ERDOS_TESTS_ORACLE_BRIDGE_HPP_
