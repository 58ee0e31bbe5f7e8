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

// Exact rational arithmetic and exact ordering of rationals against
// irrational radicals.
//
// Every threshold the library compares against is the square or fourth root
// of a positive rational that is not itself a rational square, so every
// comparison is decided without floating point: a rational s is compared to
// base^(1/d) by comparing s^d to base, and small sums of such radicals are
// compared by merging rationally dependent radicals and then bracketing the
// remainder between integer roots.

#ifndef ERDOS_EXACT_HPP_
#define ERDOS_EXACT_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "erdos/error.hpp"

namespace erdos {

/// Canonical rational p/q with q > 0 and gcd(|p|, q) = 1.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class value);

  /// Accepts "p/q" or "p" with optional leading '-'. Decimal notation is
  /// rejected so nothing is ever rounded on input.
  static Rational Parse(std::string_view text);

  const mpz_class& num() const { return value_.get_num(); }
  const mpz_class& den() const { return value_.get_den(); }
  const mpq_class& get() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }
  Rational abs() const;

  /// Always "p/q", including q = 1.
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class value_;
};

/// Integer helpers on canonical values.
bool IsPerfectSquare(const mpz_class& n);
bool IsRationalSquare(const Rational& q);
/// The nonnegative rational square root, if one exists.
std::optional<Rational> RationalSqrt(const Rational& q);
/// floor(sqrt(n)) for n >= 0.
mpz_class FloorSqrt(const mpz_class& n);

/// base^(1/degree) for a positive rational base that is not a rational
/// square, so the value is irrational and so is its square when degree = 4.
class RootValue {
 public:
  static RootValue Make(const Rational& base, int degree);

  const Rational& base() const { return base_; }
  int degree() const { return degree_; }

  /// The square of a fourth root, root(base, 2). Throws for degree 2, whose
  /// square is the rational base().
  RootValue Squared() const;

  std::string str() const;

  friend bool operator==(const RootValue&, const RootValue&) = default;

 private:
  RootValue(Rational base, int degree) : base_(std::move(base)), degree_(degree) {}

  Rational base_;
  int degree_ = 2;
};

/// Exact order of s against t. Never equal, because t is irrational.
std::strong_ordering CompareToRoot(const Rational& s, const RootValue& t);

/// A one-line account of how CompareToRoot decided, e.g.
/// "(1/2)^2 = 1/4 > 2/9".
std::string ExplainCompareToRoot(const Rational& s, const RootValue& t);

/// coeff, or coeff * root when root is present.
struct Term {
  Rational coeff;
  std::optional<RootValue> root;

  friend bool operator==(const Term&, const Term&) = default;
};

/// sqrt(value) as a term, rational when value is a rational square.
Term SqrtTerm(const Rational& value, const Rational& coeff = Rational(1));

/// A signed sum of terms. Public comparisons accept at most two terms per
/// side; the arithmetic operators are unrestricted so that intermediate
/// differences can be formed.
class RootExpr {
 public:
  RootExpr() = default;
  RootExpr(Rational value);   // NOLINT(google-explicit-constructor)
  RootExpr(RootValue value);  // NOLINT(google-explicit-constructor)
  RootExpr(Term term);        // NOLINT(google-explicit-constructor)
  RootExpr(std::initializer_list<Term> terms) : terms_(terms) {}
  explicit RootExpr(std::vector<Term> terms) : terms_(std::move(terms)) {}

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  RootExpr operator-() const;
  friend RootExpr operator+(const RootExpr& a, const RootExpr& b);
  friend RootExpr operator-(const RootExpr& a, const RootExpr& b);
  friend RootExpr operator*(const Rational& c, const RootExpr& e);

  /// Human-readable form such as "1/1 - (2/1)^(1/4)".
  std::string str() const;

  friend bool operator==(const RootExpr&, const RootExpr&) = default;

 private:
  std::vector<Term> terms_;
};

/// Exact ordering of two expressions of at most two terms each. Returns
/// equal only when the two sides denote the same real number. Throws
/// kUnsupportedForm for larger expressions.
std::strong_ordering CompareRootExpr(const RootExpr& lhs, const RootExpr& rhs);

/// Sign (-1, 0, +1) of an expression with any number of terms.
int ExactSign(const RootExpr& e);

/// Rationals lo <= value <= hi with hi - lo <= 2^-bits.
std::pair<Rational, Rational> Bracket(const RootExpr& e, unsigned bits);

/// Truncated decimal rendering with the given number of fractional digits,
/// for display only.
std::string ToDecimal(const RootExpr& e, int digits = 12);

/// The simplest rational strictly inside (lo, hi): least denominator, then
/// least absolute numerator. Found by Stern-Brocot descent.
/// Throws kEmptyInterval if lo >= hi.
Rational RationalInInterval(const RootExpr& lo, const RootExpr& hi);

/// Largest p/q with q <= max_den and p/q < x strictly. May be <= 0 when x
/// is smaller than 1/max_den.
Rational LargestRationalBelow(const RootExpr& x, const mpz_class& max_den);

std::string OrderingName(std::strong_ordering order);

}  // namespace erdos

#endif  // ERDOS_EXACT_HPP_
