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

// The sets E_alpha, A(alpha, beta) and O = intersection of A(alpha_n, beta_n),
// and certified neighbourhood radii around their points.
//
// Membership is decided exactly. The radius routines return a rational
// lower bound for an explicit radius such that the whole open ball of that
// radius keeps the membership status of its centre. They certify radii at
// sampled points; they do not and cannot prove the sets clopen globally.

#ifndef ERDOS_CLOPEN_HPP_
#define ERDOS_CLOPEN_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "erdos/exact.hpp"
#include "erdos/space.hpp"

namespace erdos {

/// Decision log filled by the membership predicates when requested.
using Trace = std::vector<std::string>;

/// alpha is a fourth root (alpha^2 irrational) and beta a square root
/// (beta irrational).
class AlphaBetaPair {
 public:
  static AlphaBetaPair Make(RootValue alpha, RootValue beta);

  const RootValue& alpha() const { return alpha_; }
  const RootValue& beta() const { return beta_; }

 private:
  AlphaBetaPair(RootValue alpha, RootValue beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  RootValue alpha_;
  RootValue beta_;
};

/// alpha_n = n * alpha_scale^(1/4) and beta_n = beta_scale^(1/2) / n.
///
/// Both scales must be positive non-squares, which makes alpha_n^2 =
/// n^2 sqrt(alpha_scale) and beta_n irrational for every n; alpha_n then
/// increases without bound and beta_n decreases to 0. The default uses
/// scale 2 for both.
class Schedule {
 public:
  static Schedule Make(const Rational& alpha_scale, const Rational& beta_scale, int degree = 4);
  static Schedule Default();

  const Rational& alpha_scale() const { return alpha_scale_; }
  const Rational& beta_scale() const { return beta_scale_; }
  int degree() const { return 4; }

  RootValue alpha_at(std::uint64_t n) const;
  RootValue beta_at(std::uint64_t n) const;
  AlphaBetaPair pair_at(std::uint64_t n) const;

 private:
  Schedule(Rational a, Rational b) : alpha_scale_(std::move(a)), beta_scale_(std::move(b)) {}

  Rational alpha_scale_;
  Rational beta_scale_;
};

bool InEAlpha(const Point& x, const RootValue& alpha, Trace* trace = nullptr);
bool InA(const Point& x, const AlphaBetaPair& pair, Trace* trace = nullptr);

/// Least n with ||x||^2 < alpha_n^2. Every A(alpha_n, beta_n) with n at or
/// beyond it contains x, because the open ball B(0, alpha_n) does.
std::uint64_t OHorizon(const Point& x, const Schedule& s);

/// x in A(alpha_n, beta_n) for every n <= horizon.
bool InOUpTo(const Point& x, const Schedule& s, std::uint64_t horizon, Trace* trace = nullptr);

/// Membership in the full intersection, decided with OHorizon(x) terms.
bool InO(const Point& x, const Schedule& s, Trace* trace = nullptr);

/// Least n with x outside A(alpha_n, beta_n), or 0 when x is in O.
std::uint64_t FirstFailingIndex(const Point& x, const Schedule& s);

enum class CertificateKind {
  kBallMargin,       // x inside the open ball B(0, alpha)
  kClosedness,       // z outside A: r0
  kSphereMargin,     // ||x|| = alpha: r1 (no finite-support point reaches it)
  kOpenness,         // x in A with an m-index: r
  kIntersection,     // x in O: the W neighbourhood
};

/// Serialized names: Claim1Margin, Claim2_r0, Claim3_r1, Claim3_r, Claim4_W.
std::string_view CertificateKindName(CertificateKind kind);
CertificateKind ParseCertificateKind(std::string_view name);

struct RadiusComponent {
  std::string name;
  RootExpr value;
};

struct RadiusCertificate {
  CertificateKind kind = CertificateKind::kBallMargin;
  /// Positive rational with bound < radius.
  Rational bound;
  /// The exact radius, the least of the components.
  RootExpr radius;
  std::vector<RadiusComponent> components;
  /// Integer data of the construction: m, l0, n0.
  std::map<std::string, std::uint64_t> indices;
};

struct CertificateOptions {
  /// The bound is the largest rational below the radius with at most this
  /// denominator. If that is not positive, the simplest rational in
  /// (0, radius) is used instead.
  mpz_class max_denominator = 1000000;
};

/// Radius of a ball around z that misses A. Requires z outside A.
RadiusCertificate ClosednessRadius(const Point& z, const AlphaBetaPair& pair, const CertificateOptions& options = {});

/// Radius of a ball around x inside A. Requires x in A.
RadiusCertificate OpennessRadius(const Point& x, const AlphaBetaPair& pair, const CertificateOptions& options = {});

/// Radius of a ball around x inside O. Requires x in O.
RadiusCertificate OOpennessRadius(const Point& x, const Schedule& s, const CertificateOptions& options = {});

/// Least of the given expressions, by exact comparison.
const RootExpr& ExactMin(const std::vector<RootExpr>& values);

/// Checks that the bound is positive and below every component.
bool VerifyCertificate(const RadiusCertificate& cert);

}  // namespace erdos

#endif  // ERDOS_CLOPEN_HPP_
