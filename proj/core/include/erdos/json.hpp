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

// JSON forms of the library's values.
//
//   Rational        "p/q" (canonical, q > 0)
//   RootValue       {"base": "p/q", "degree": 2|4}
//   Point           {"coords": {"1": "4/1", "2": "1/2"}}, 1-based indices
//   Schedule        {"alpha_scale": "2/1", "beta_scale": "2/1", "degree": 4}
//   certificates    {"kind", "bound", "radius", "components", "indices"}
//   witnesses       points in Point form, integers plain, q as "p/q", and a
//                   "checks" block of verified inequalities with traces.

#ifndef ERDOS_JSON_HPP_
#define ERDOS_JSON_HPP_

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "erdos/clopen.hpp"
#include "erdos/exact.hpp"
#include "erdos/space.hpp"
#include "erdos/witness.hpp"

namespace erdos {

using Json = nlohmann::json;

Json ToJson(const Rational& q);
Json ToJson(const RootValue& r);
Json ToJson(const RootExpr& e);
Json ToJson(const Point& p);
Json ToJson(const Schedule& s);
Json ToJson(const AlphaBetaPair& pair);
Json ToJson(const RadiusCertificate& cert);
Json ToJson(const CheckResult& check);
Json ToJson(const WitnessRecord& w);
Json ToJson(const Verdict& v);

// Parsers throw Error(kInvalidInput) on malformed documents and
// Error(kInvalidRational) / Error(kInvalidRoot) on bad values.
Rational RationalFromJson(const Json& j);
RootValue RootValueFromJson(const Json& j);
Point PointFromJson(const Json& j);
Schedule ScheduleFromJson(const Json& j);
/// A JSON array of points, or {"points": [...]}.
std::vector<Point> PointsFromJson(const Json& j);

/// Compact, or two-space indentation when pretty is set. Content is the
/// same either way.
std::string Dump(const Json& j, bool pretty);

}  // namespace erdos

#endif  // ERDOS_JSON_HPP_
