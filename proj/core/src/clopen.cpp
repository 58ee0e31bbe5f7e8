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

#include "erdos/clopen.hpp"

#include "erdos/detail/search.hpp"

namespace erdos {

AlphaBetaPair AlphaBetaPair::Make(RootValue alpha, RootValue beta) {
  if (alpha.degree() != 4) {
    throw Error(ErrorCode::kInvalidParams, "alpha must be a fourth root so that alpha^2 is irrational, got " + alpha.str());
  }
  if (beta.degree() != 2) {
    throw Error(ErrorCode::kInvalidParams, "beta must be a square root of a non-square rational, got " + beta.str());
  }
  return AlphaBetaPair(std::move(alpha), std::move(beta));
}

Schedule Schedule::Make(const Rational& alpha_scale, const Rational& beta_scale, int degree) {
  if (degree != 4) {
    throw Error(ErrorCode::kInvalidParams,
                "schedule degree must be 4 (alpha_n^2 irrational needs a fourth root), got " + std::to_string(degree));
  }
  // Validates positivity and irrationality through the RootValue invariant.
  RootValue::Make(alpha_scale, 4);
  RootValue::Make(beta_scale, 2);
  return Schedule(alpha_scale, beta_scale);
}

Schedule Schedule::Default() { return Make(Rational(2), Rational(2)); }

RootValue Schedule::alpha_at(std::uint64_t n) const {
  if (n == 0) throw Error(ErrorCode::kInvalidParams, "schedule indices start at 1");
  mpz_class nn(std::to_string(n));
  return RootValue::Make(alpha_scale_ * Rational(nn * nn * nn * nn, 1), 4);
}

RootValue Schedule::beta_at(std::uint64_t n) const {
  if (n == 0) throw Error(ErrorCode::kInvalidParams, "schedule indices start at 1");
  mpz_class nn(std::to_string(n));
  return RootValue::Make(beta_scale_ / Rational(nn * nn, 1), 2);
}

AlphaBetaPair Schedule::pair_at(std::uint64_t n) const { return AlphaBetaPair::Make(alpha_at(n), beta_at(n)); }

// ---------------------------------------------------------------------------
// Membership

bool InEAlpha(const Point& x, const RootValue& alpha, Trace* trace) {
  auto m = MIndex(x, alpha);
  if (trace) {
    if (m) {
      trace->push_back("m-index for alpha=" + alpha.str() + " is " + std::to_string(*m) + ": " +
                       ExplainCompareToRoot(PartialNormSq(x, *m), alpha.Squared()));
    } else {
      trace->push_back("no m-index for alpha=" + alpha.str() + ": " +
                       ExplainCompareToRoot(NormSq(x), alpha.Squared()));
    }
  }
  return !m;
}

bool InA(const Point& x, const AlphaBetaPair& pair, Trace* trace) {
  auto m = MIndex(x, pair.alpha());
  if (!m) {
    if (trace) {
      trace->push_back("x in E_alpha for alpha=" + pair.alpha().str() + ": " +
                       ExplainCompareToRoot(NormSq(x), pair.alpha().Squared()));
    }
    return true;
  }
  if (trace) {
    trace->push_back("m-index for alpha=" + pair.alpha().str() + " is " + std::to_string(*m) + ": " +
                     ExplainCompareToRoot(PartialNormSq(x, *m), pair.alpha().Squared()));
  }
  for (auto it = x.coords().upper_bound(*m); it != x.coords().end(); ++it) {
    if (CompareToRoot(it->second.abs(), pair.beta()) == std::strong_ordering::greater) {
      if (trace) {
        trace->push_back("|x_" + std::to_string(it->first) + "| > beta=" + pair.beta().str() + ": " +
                         ExplainCompareToRoot(it->second.abs(), pair.beta()));
      }
      return false;
    }
  }
  if (trace) trace->push_back("every coordinate beyond index " + std::to_string(*m) + " is below beta=" + pair.beta().str());
  return true;
}

std::uint64_t OHorizon(const Point& x, const Schedule& s) {
  const Rational norm_sq = NormSq(x);
  auto n = detail::LeastTrue([&](std::uint64_t n) {
    return CompareToRoot(norm_sq, s.alpha_at(n).Squared()) == std::strong_ordering::less;
  });
  if (!n) throw Error(ErrorCode::kScheduleExhausted, "no schedule index exceeds the norm of the point");
  return *n;
}

bool InOUpTo(const Point& x, const Schedule& s, std::uint64_t horizon, Trace* trace) {
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    Trace local;
    if (!InA(x, s.pair_at(n), trace ? &local : nullptr)) {
      if (trace) {
        trace->push_back("n=" + std::to_string(n) + ": x not in A(alpha_n, beta_n)");
        trace->insert(trace->end(), local.begin(), local.end());
      }
      return false;
    }
  }
  return true;
}

bool InO(const Point& x, const Schedule& s, Trace* trace) {
  const std::uint64_t horizon = OHorizon(x, s);
  bool member = InOUpTo(x, s, horizon, trace);
  if (member && trace) {
    trace->push_back("x in A(alpha_n, beta_n) for n <= " + std::to_string(horizon) + "; ||x||^2 = " +
                     NormSq(x).str() + " < alpha_" + std::to_string(horizon) + "^2 covers every later n: " +
                     ExplainCompareToRoot(NormSq(x), s.alpha_at(horizon).Squared()));
  }
  return member;
}

std::uint64_t FirstFailingIndex(const Point& x, const Schedule& s) {
  const std::uint64_t horizon = OHorizon(x, s);
  for (std::uint64_t n = 1; n <= horizon; ++n) {
    if (!InA(x, s.pair_at(n))) return n;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Certificates

std::string_view CertificateKindName(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::kBallMargin: return "Claim1Margin";
    case CertificateKind::kClosedness: return "Claim2_r0";
    case CertificateKind::kSphereMargin: return "Claim3_r1";
    case CertificateKind::kOpenness: return "Claim3_r";
    case CertificateKind::kIntersection: return "Claim4_W";
  }
  return "Unknown";
}

CertificateKind ParseCertificateKind(std::string_view name) {
  for (auto k : {CertificateKind::kBallMargin, CertificateKind::kClosedness, CertificateKind::kSphereMargin,
                 CertificateKind::kOpenness, CertificateKind::kIntersection}) {
    if (CertificateKindName(k) == name) return k;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown certificate kind \"" + std::string(name) + "\"");
}

const RootExpr& ExactMin(const std::vector<RootExpr>& values) {
  if (values.empty()) throw Error(ErrorCode::kInvalidParams, "minimum of an empty set");
  const RootExpr* best = &values.front();
  for (const RootExpr& v : values) {
    if (CompareRootExpr(v, *best) == std::strong_ordering::less) best = &v;
  }
  return *best;
}

namespace {

RootExpr Difference(const Term& a, const Term& b) { return RootExpr{a, Term{-b.coeff, b.root}}; }

Term RootTerm(const RootValue& r, Rational coeff = Rational(1)) { return Term{std::move(coeff), r}; }

// Radius and components without the rational bound.
struct Radius {
  CertificateKind kind;
  RootExpr radius;
  std::vector<RadiusComponent> components;
  std::map<std::string, std::uint64_t> indices;
};

void SetMin(Radius& r) {
  std::vector<RootExpr> values;
  values.reserve(r.components.size());
  for (const auto& c : r.components) values.push_back(c.value);
  r.radius = ExactMin(values);
}

Rational MakeBound(const RootExpr& radius, const CertificateOptions& options) {
  Rational bound = LargestRationalBelow(radius, options.max_denominator);
  if (bound.sign() <= 0) bound = RationalInInterval(Rational(0), radius);
  return bound;
}

RadiusCertificate Finish(Radius r, const CertificateOptions& options) {
  RadiusCertificate cert;
  cert.kind = r.kind;
  cert.bound = MakeBound(r.radius, options);
  cert.radius = std::move(r.radius);
  cert.components = std::move(r.components);
  cert.indices = std::move(r.indices);
  return cert;
}

// Least l with sum_{k>=l} x_k^2 < beta^2 / 4. The tail is constant between
// consecutive support indices, so the answer is one past a support index
// (or 1).
Index TailIndex(const Point& x, const RootValue& beta) {
  const Rational quarter = beta.base() / Rational(4);
  Rational tail = NormSq(x);
  Index previous = 0;
  for (const auto& [k, v] : x.coords()) {
    // tail is the sum from index k onwards, valid for every l in (previous, k].
    if (tail < quarter) return previous + 1;
    tail -= v * v;
    previous = k;
  }
  return previous + 1;
}

Radius OpennessRadiusImpl(const Point& x, const AlphaBetaPair& pair) {
  if (!InA(x, pair)) {
    throw Error(ErrorCode::kPreconditionViolated, "openness radius needs a point of A(alpha, beta)");
  }
  const RootValue& alpha = pair.alpha();
  const RootValue& beta = pair.beta();
  Radius r;
  auto m = MIndex(x, alpha);
  if (!m) {
    // ||x||^2 is rational and alpha^2 is not, so ||x|| < alpha strictly.
    r.kind = CertificateKind::kBallMargin;
    r.components.push_back({"alpha - ||x||", Difference(RootTerm(alpha), SqrtTerm(NormSq(x)))});
    SetMin(r);
    return r;
  }
  r.kind = CertificateKind::kOpenness;
  const Index l0 = TailIndex(x, beta);
  r.indices["m"] = *m;
  r.indices["l0"] = l0;
  r.components.push_back(
      {"partial-sum margin", Difference(SqrtTerm(PartialNormSq(x, *m)), RootTerm(alpha))});
  r.components.push_back({"beta/2", RootExpr(RootTerm(beta, Rational(1, 2)))});

  std::vector<RootExpr> gaps;
  std::uint64_t covered = 0;
  for (auto it = x.coords().begin(); it != x.coords().end() && it->first <= l0; ++it) {
    ++covered;
    Rational a = it->second.abs();
    if (CompareToRoot(a, beta) == std::strong_ordering::less) {
      gaps.push_back(Difference(RootTerm(beta), Term{a, std::nullopt}));
    } else {
      gaps.push_back(Difference(Term{a, std::nullopt}, RootTerm(beta)));
    }
  }
  // Indices up to l0 outside the support contribute |beta - 0| = beta.
  if (covered < l0) gaps.push_back(RootExpr(beta));
  r.components.push_back({"h_x", ExactMin(gaps)});

  if (*m > 1) {
    r.components.push_back({"a_x", Difference(RootTerm(alpha), SqrtTerm(PartialNormSq(x, *m - 1)))});
  } else {
    r.components.push_back({"a_x", RootExpr(Rational(1))});
  }
  SetMin(r);
  return r;
}

}  // namespace

RadiusCertificate ClosednessRadius(const Point& z, const AlphaBetaPair& pair, const CertificateOptions& options) {
  if (InA(z, pair)) {
    throw Error(ErrorCode::kPreconditionViolated, "closedness radius needs a point outside A(alpha, beta)");
  }
  const Index m = *MIndex(z, pair.alpha());
  Index l0 = 0;
  Rational z_l0;
  for (auto it = z.coords().upper_bound(m); it != z.coords().end(); ++it) {
    if (CompareToRoot(it->second.abs(), pair.beta()) == std::strong_ordering::greater) {
      l0 = it->first;
      z_l0 = it->second.abs();
      break;
    }
  }
  Radius r;
  r.kind = CertificateKind::kClosedness;
  r.indices["m"] = m;
  r.indices["l0"] = l0;
  r.components.push_back({"|z_l0| - beta", Difference(Term{z_l0, std::nullopt}, RootTerm(pair.beta()))});
  r.components.push_back(
      {"partial-sum margin", Difference(SqrtTerm(PartialNormSq(z, m)), RootTerm(pair.alpha()))});
  SetMin(r);
  return Finish(std::move(r), options);
}

RadiusCertificate OpennessRadius(const Point& x, const AlphaBetaPair& pair, const CertificateOptions& options) {
  return Finish(OpennessRadiusImpl(x, pair), options);
}

RadiusCertificate OOpennessRadius(const Point& x, const Schedule& s, const CertificateOptions& options) {
  if (!InO(x, s)) throw Error(ErrorCode::kPreconditionViolated, "O-openness radius needs a point of O");
  const std::uint64_t n0 = OHorizon(x, s);
  Radius r;
  r.kind = CertificateKind::kIntersection;
  r.indices["n0"] = n0;
  for (std::uint64_t n = 1; n <= n0; ++n) {
    Radius inner = OpennessRadiusImpl(x, s.pair_at(n));
    r.components.push_back({"A_" + std::to_string(n) + " radius", inner.radius});
  }
  r.components.push_back({"alpha_n0 - ||x||", Difference(RootTerm(s.alpha_at(n0)), SqrtTerm(NormSq(x)))});
  SetMin(r);
  return Finish(std::move(r), options);
}

bool VerifyCertificate(const RadiusCertificate& cert) {
  if (cert.bound.sign() <= 0) return false;
  if (CompareRootExpr(cert.bound, cert.radius) != std::strong_ordering::less) return false;
  for (const auto& c : cert.components) {
    if (CompareRootExpr(cert.bound, c.value) != std::strong_ordering::less) return false;
  }
  return true;
}

}  // namespace erdos
