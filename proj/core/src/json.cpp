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

#include "erdos/json.hpp"

#include <cctype>

namespace erdos {
namespace {

[[noreturn]] void Malformed(const std::string& what) { throw Error(ErrorCode::kInvalidInput, "malformed input: " + what); }

Index ParseIndex(const std::string& key) {
  if (key.empty() || key.size() > 19) Malformed("coordinate index \"" + key + "\" is not a positive integer");
  for (char c : key) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      Malformed("coordinate index \"" + key + "\" is not a positive integer");
    }
  }
  Index k = std::stoull(key);
  if (k == 0) Malformed("coordinate indices are 1-based; got 0");
  return k;
}

}  // namespace

Json ToJson(const Rational& q) { return q.str(); }

Json ToJson(const RootValue& r) { return Json{{"base", r.base().str()}, {"degree", r.degree()}}; }

Json ToJson(const RootExpr& e) {
  Json terms = Json::array();
  for (const Term& t : e.terms()) {
    Json term{{"coeff", t.coeff.str()}};
    if (t.root) term["root"] = ToJson(*t.root);
    terms.push_back(std::move(term));
  }
  return Json{{"terms", std::move(terms)}, {"text", e.str()}, {"approx", ToDecimal(e, 12)}};
}

Json ToJson(const Point& p) {
  Json coords = Json::object();
  for (const auto& [k, v] : p.coords()) coords[std::to_string(k)] = v.str();
  return Json{{"coords", std::move(coords)}};
}

Json ToJson(const Schedule& s) {
  return Json{{"alpha_scale", s.alpha_scale().str()}, {"beta_scale", s.beta_scale().str()}, {"degree", s.degree()}};
}

Json ToJson(const AlphaBetaPair& pair) { return Json{{"alpha", ToJson(pair.alpha())}, {"beta", ToJson(pair.beta())}}; }

Json ToJson(const RadiusCertificate& cert) {
  Json components = Json::array();
  for (const auto& c : cert.components) {
    components.push_back(Json{{"name", c.name}, {"value", ToJson(c.value)}});
  }
  Json indices = Json::object();
  for (const auto& [name, value] : cert.indices) indices[name] = value;
  return Json{{"kind", std::string(CertificateKindName(cert.kind))},
              {"bound", cert.bound.str()},
              {"radius", ToJson(cert.radius)},
              {"components", std::move(components)},
              {"indices", std::move(indices)}};
}

Json ToJson(const CheckResult& check) {
  return Json{{"statement", check.statement}, {"holds", check.holds}, {"trace", check.trace}};
}

Json ToJson(const WitnessRecord& w) {
  Json checks = Json::array();
  for (const auto& c : w.checks) checks.push_back(ToJson(c));
  return Json{{"ball_radius", w.ball_radius.str()},
              {"x", ToJson(w.x)},
              {"y", ToJson(w.y)},
              {"z", ToJson(w.z)},
              {"n_star", w.n_star},
              {"m1", w.m1},
              {"m2", w.m2},
              {"m_star", w.m_star},
              {"l_star", w.l_star},
              {"q", w.q.str()},
              {"case", std::string(WitnessCaseName(w.sign_case))},
              {"failing_n", w.failing_n},
              {"checks", std::move(checks)}};
}

Json ToJson(const Verdict& v) {
  Json rechecks = Json::array();
  for (const auto& c : v.rechecks) rechecks.push_back(ToJson(c));
  return Json{{"premises", v.premises},
              {"witness", ToJson(v.witness)},
              {"rechecks", std::move(rechecks)},
              {"verified", v.verified},
              {"conclusion", v.conclusion}};
}

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return Rational::Parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(j.dump()), 1);
  throw Error(ErrorCode::kInvalidRational, "invalid rational " + j.dump() + ": expected a \"p/q\" string");
}

RootValue RootValueFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("degree") || !j["degree"].is_number_integer()) {
    Malformed("root value must be {\"base\": \"p/q\", \"degree\": 2|4}");
  }
  return RootValue::Make(RationalFromJson(j["base"]), j["degree"].get<int>());
}

Point PointFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("coords") || !j["coords"].is_object()) {
    Malformed("point must be {\"coords\": {\"index\": \"p/q\", ...}}");
  }
  Point::Coords coords;
  for (const auto& [key, value] : j["coords"].items()) {
    coords.emplace(ParseIndex(key), RationalFromJson(value));
  }
  return Point::FromCoords(std::move(coords));
}

Schedule ScheduleFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("alpha_scale") || !j.contains("beta_scale")) {
    Malformed("schedule must be {\"alpha_scale\": \"p/q\", \"beta_scale\": \"p/q\", \"degree\": 4}");
  }
  int degree = 4;
  if (j.contains("degree")) {
    if (!j["degree"].is_number_integer()) Malformed("schedule degree must be an integer");
    degree = j["degree"].get<int>();
  }
  return Schedule::Make(RationalFromJson(j["alpha_scale"]), RationalFromJson(j["beta_scale"]), degree);
}

std::vector<Point> PointsFromJson(const Json& j) {
  const Json* list = &j;
  if (j.is_object() && j.contains("points")) list = &j["points"];
  if (!list->is_array()) Malformed("expected an array of points or {\"points\": [...]}");
  std::vector<Point> out;
  for (const auto& item : *list) out.push_back(PointFromJson(item));
  return out;
}

std::string Dump(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

}  // namespace erdos
