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

#include "erdos/exact.hpp"

#include <cctype>
#include <sstream>

#include "erdos/detail/search.hpp"
#include "radical_sum.hpp"

namespace erdos {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidRational: return "InvalidRational";
    case ErrorCode::kInvalidRoot: return "InvalidRoot";
    case ErrorCode::kUnsupportedForm: return "UnsupportedForm";
    case ErrorCode::kEmptyInterval: return "EmptyInterval";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kSourceFailure: return "SourceFailure";
    case ErrorCode::kScheduleExhausted: return "ScheduleExhausted";
    case ErrorCode::kInvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kInvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) {
    throw Error(ErrorCode::kInvalidRational, "invalid rational: denominator must be nonzero");
  }
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

namespace {

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational Rational::Parse(std::string_view text) {
  auto fail = [&](const char* why) -> Rational {
    throw Error(ErrorCode::kInvalidRational,
                "invalid rational \"" + std::string(text) + "\": " + why);
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num_text = body;
  std::string_view den_text = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
  }
  if (!IsDigits(num_text) || !IsDigits(den_text)) {
    return fail("expected p/q with decimal integers p and q");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) return fail("denominator must be nonzero");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::str() const { return num().get_str() + "/" + den().get_str(); }

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInvalidRational, "invalid rational: division by zero");
  return Rational(mpq_class(a.value_ / b.value_));
}
Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }
Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool IsPerfectSquare(const mpz_class& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool IsRationalSquare(const Rational& q) {
  return q.sign() >= 0 && IsPerfectSquare(q.num()) && IsPerfectSquare(q.den());
}

std::optional<Rational> RationalSqrt(const Rational& q) {
  if (!IsRationalSquare(q)) return std::nullopt;
  return Rational(FloorSqrt(q.num()), FloorSqrt(q.den()));
}

mpz_class FloorSqrt(const mpz_class& n) {
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// ---------------------------------------------------------------------------
// RootValue

RootValue RootValue::Make(const Rational& base, int degree) {
  if (degree != 2 && degree != 4) {
    throw Error(ErrorCode::kInvalidRoot,
                "invalid root value: degree must be 2 or 4, got " + std::to_string(degree));
  }
  if (base.sign() <= 0) {
    throw Error(ErrorCode::kInvalidRoot, "invalid root value: base " + base.str() + " must be positive");
  }
  if (IsRationalSquare(base)) {
    throw Error(ErrorCode::kInvalidRoot,
                "invalid root value: base " + base.str() + " is a rational square, so the root is not irrational");
  }
  return RootValue(base, degree);
}

RootValue RootValue::Squared() const {
  if (degree_ != 4) {
    throw Error(ErrorCode::kInvalidRoot, "square of a square root is rational: " + str());
  }
  return RootValue(base_, 2);
}

std::string RootValue::str() const {
  return "(" + base_.str() + ")^(1/" + std::to_string(degree_) + ")";
}

namespace {

Rational Power(const Rational& s, int d) {
  Rational r(1);
  for (int i = 0; i < d; ++i) r *= s;
  return r;
}

}  // namespace

std::strong_ordering CompareToRoot(const Rational& s, const RootValue& t) {
  if (s.sign() <= 0) return std::strong_ordering::less;
  // s > 0: s < base^(1/d)  <=>  s^d < base. Equality is excluded by the
  // RootValue invariant.
  return Power(s, t.degree()) < t.base() ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string ExplainCompareToRoot(const Rational& s, const RootValue& t) {
  std::ostringstream out;
  if (s.sign() <= 0) {
    out << s.str() << " <= 0 < " << t.str();
    return out.str();
  }
  Rational p = Power(s, t.degree());
  out << "(" << s.str() << ")^" << t.degree() << " = " << p.str() << (p < t.base() ? " < " : " > ")
      << t.base().str();
  return out.str();
}

// ---------------------------------------------------------------------------
// Terms and expressions

Term SqrtTerm(const Rational& value, const Rational& coeff) {
  if (value.sign() < 0) {
    throw Error(ErrorCode::kInvalidParams, "square root of negative rational " + value.str());
  }
  if (auto r = RationalSqrt(value)) return Term{coeff * *r, std::nullopt};
  return Term{coeff, RootValue::Make(value, 2)};
}

RootExpr::RootExpr(Rational value) : terms_{Term{std::move(value), std::nullopt}} {}
RootExpr::RootExpr(RootValue value) : terms_{Term{Rational(1), std::move(value)}} {}
RootExpr::RootExpr(Term term) : terms_{std::move(term)} {}

RootExpr RootExpr::operator-() const {
  RootExpr out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

RootExpr operator+(const RootExpr& a, const RootExpr& b) {
  RootExpr out = a;
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

RootExpr operator-(const RootExpr& a, const RootExpr& b) { return a + (-b); }

RootExpr operator*(const Rational& c, const RootExpr& e) {
  RootExpr out = e;
  for (Term& t : out.terms_) t.coeff = c * t.coeff;
  return out;
}

std::string RootExpr::str() const {
  if (terms_.empty()) return "0/1";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    Rational mag = t.coeff.abs();
    if (first) {
      if (t.coeff.sign() < 0) out += "-";
    } else {
      out += t.coeff.sign() < 0 ? " - " : " + ";
    }
    first = false;
    if (!t.root) {
      out += mag.str();
    } else if (mag == Rational(1)) {
      out += t.root->str();
    } else {
      out += mag.str() + "*" + t.root->str();
    }
  }
  return out;
}

int ExactSign(const RootExpr& e) { return detail::RadicalSum(e).Sign(); }

std::strong_ordering CompareRootExpr(const RootExpr& lhs, const RootExpr& rhs) {
  if (lhs.size() > 2 || rhs.size() > 2) {
    throw Error(ErrorCode::kUnsupportedForm,
                "unsupported form: comparisons take at most two terms per side, got " + std::to_string(lhs.size()) +
                    " and " + std::to_string(rhs.size()));
  }
  int s = ExactSign(lhs - rhs);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::pair<Rational, Rational> Bracket(const RootExpr& e, unsigned bits) {
  auto [lo, hi] = detail::RadicalSum(e).Bracket(bits);
  return {Rational(lo), Rational(hi)};
}

std::string ToDecimal(const RootExpr& e, int digits) {
  // 10^digits < 2^(4 digits), so a bracket at that scale fixes all but the
  // last digit.
  auto [lo, hi] = detail::RadicalSum(e).Bracket(static_cast<unsigned>(4 * digits + 8));
  mpq_class mid = (lo + hi) / 2;
  bool negative = sgn(mid) < 0;
  if (negative) mid = -mid;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = mid.get_num() * scale / mid.get_den();
  mpz_class whole = scaled / scale;
  mpz_class frac = scaled % scale;
  std::string frac_text = frac.get_str();
  frac_text.insert(0, static_cast<std::size_t>(digits) - frac_text.size(), '0');
  std::string out = negative && scaled != 0 ? "-" : "";
  out += whole.get_str();
  if (digits > 0) out += "." + frac_text;
  return out;
}

std::string OrderingName(std::strong_ordering order) {
  if (order == std::strong_ordering::less) return "Less";
  if (order == std::strong_ordering::greater) return "Greater";
  return "Equal";
}

// ---------------------------------------------------------------------------
// Stern-Brocot searches

namespace {

// Sign of (a/b - x) for a rational a/b and expression x.
int SignAgainst(const mpz_class& a, const mpz_class& b, const detail::RadicalSum& neg_x) {
  detail::RadicalSum diff = neg_x;
  mpq_class m(a, b);
  m.canonicalize();
  diff.Add(m, mpz_class(1));
  return diff.Sign();
}

detail::RadicalSum Negated(const RootExpr& e) { return detail::RadicalSum(-e); }

std::uint64_t ToU64(const mpz_class& v) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  if (!v.fits_ulong_p()) return UINT64_MAX;
  return v.get_ui();
}

// Simplest rational strictly inside (lo, hi) for 0 <= lo < hi.
Rational SimplestPositive(const RootExpr& lo, const RootExpr& hi) {
  const detail::RadicalSum neg_lo = Negated(lo);
  const detail::RadicalSum neg_hi = Negated(hi);
  // -1: m <= lo, +1: m >= hi, 0: inside.
  auto locate = [&](const mpz_class& p, const mpz_class& q) {
    if (SignAgainst(p, q, neg_lo) <= 0) return -1;
    if (SignAgainst(p, q, neg_hi) >= 0) return 1;
    return 0;
  };
  mpz_class a = 0, b = 1, c = 1, d = 0;
  for (;;) {
    int where = locate(a + c, b + d);
    if (where == 0) return Rational(a + c, b + d);
    if (where < 0) {
      auto k = detail::LargestTrue(
          [&](std::uint64_t k) { return locate(a + c * k, b + d * k) < 0; }, std::nullopt);
      if (!k) throw std::logic_error("Stern-Brocot descent diverged");
      a += c * *k;
      b += d * *k;
    } else {
      auto k = detail::LargestTrue(
          [&](std::uint64_t k) { return locate(c + a * k, d + b * k) > 0; }, std::nullopt);
      if (!k) throw std::logic_error("Stern-Brocot descent diverged");
      c += a * *k;
      d += b * *k;
    }
  }
}

// Largest p/q < u with q <= max_den, for rational u > 0.
mpq_class FareyPredecessor(const mpq_class& u, const mpz_class& max_den) {
  mpz_class a = 0, b = 1, c = 1, d = 0;
  // Stern-Brocot mediants are in lowest terms, as mpq comparison requires.
  auto below = [&](const mpz_class& p, const mpz_class& q) { return cmp(mpq_class(p, q), u) < 0; };
  for (;;) {
    if (b + d > max_den) return mpq_class(a, b);
    mpz_class mp = a + c, mq = b + d;
    if (below(mp, mq)) {
      std::optional<std::uint64_t> limit;
      if (d != 0) limit = ToU64((max_den - b) / d);
      auto k = detail::LargestTrue([&](std::uint64_t k) { return below(a + c * k, b + d * k); }, limit);
      if (!k) throw std::logic_error("Farey descent diverged");
      a += c * *k;
      b += d * *k;
    } else {
      std::optional<std::uint64_t> limit = ToU64((max_den - d) / b);
      auto k = detail::LargestTrue([&](std::uint64_t k) { return !below(c + a * k, d + b * k); }, limit);
      if (!k) throw std::logic_error("Farey descent diverged");
      c += a * *k;
      d += b * *k;
    }
  }
}

unsigned BitLength(const mpz_class& n) { return static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2)); }

}  // namespace

Rational RationalInInterval(const RootExpr& lo, const RootExpr& hi) {
  if (ExactSign(hi - lo) <= 0) {
    throw Error(ErrorCode::kEmptyInterval, "empty interval: (" + lo.str() + ", " + hi.str() + ")");
  }
  int lo_sign = ExactSign(lo);
  int hi_sign = ExactSign(hi);
  if (lo_sign < 0 && hi_sign > 0) return Rational(0);
  if (lo_sign >= 0) return SimplestPositive(lo, hi);
  return -SimplestPositive(-hi, -lo);
}

Rational LargestRationalBelow(const RootExpr& x, const mpz_class& max_den) {
  if (max_den < 1) throw Error(ErrorCode::kInvalidParams, "denominator cap must be positive");
  const detail::RadicalSum sum(x);
  if (sum.Sign() <= 0) {
    throw Error(ErrorCode::kPreconditionViolated, "LargestRationalBelow needs a positive value, got " + x.str());
  }
  auto [lo, hi] = sum.Bracket(2 * BitLength(max_den) + 16);
  mpq_class upper = hi;  // upper >= x
  const detail::RadicalSum neg_x = Negated(x);
  for (;;) {
    mpq_class f = FareyPredecessor(upper, max_den);
    // Every fraction strictly between f and upper has denominator > max_den,
    // so f answers as soon as f < x.
    if (SignAgainst(f.get_num(), f.get_den(), neg_x) < 0) return Rational(f);
    upper = f;
  }
}

}  // namespace erdos
