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

#include "radical_sum.hpp"

#include <algorithm>
#include <stdexcept>

namespace erdos::detail {
namespace {

// r with r^4 == n, if n is a perfect fourth power.
bool ExactFourthRoot(const mpz_class& n, mpz_class& r) {
  return mpz_root(r.get_mpz_t(), n.get_mpz_t(), 4) != 0;
}

mpz_class FloorFourthRoot(const mpz_class& n, bool& exact) {
  mpz_class r;
  exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), 4) != 0;
  return r;
}

}  // namespace

RadicalSum::RadicalSum(const RootExpr& e) {
  for (const Term& t : e.terms()) Add(t);
}

void RadicalSum::Add(const Term& term) {
  if (term.coeff.is_zero()) return;
  if (!term.root) {
    Add(term.coeff.get(), mpz_class(1));
    return;
  }
  const mpz_class& p = term.root->base().num();
  const mpz_class& q = term.root->base().den();
  mpq_class coeff = term.coeff.get() / mpq_class(q);
  coeff.canonicalize();
  if (term.root->degree() == 2) {
    Add(coeff, p * p * q * q);
  } else {
    Add(coeff, p * q * q * q);
  }
}

void RadicalSum::Add(const mpq_class& coeff, const mpz_class& radicand) {
  if (sgn(coeff) == 0) return;
  for (auto it = radicals_.begin(); it != radicals_.end(); ++it) {
    mpq_class ratio;
    if (it->radicand == radicand) {
      ratio = 1;
    } else {
      // radicand / rep is a rational fourth power iff radicand * rep^3 is an
      // integer fourth power; then (radicand / rep)^(1/4) = r / rep.
      mpz_class cube = it->radicand * it->radicand * it->radicand;
      mpz_class r;
      if (!ExactFourthRoot(radicand * cube, r)) continue;
      ratio = mpq_class(r, it->radicand);
      ratio.canonicalize();
    }
    it->coeff += coeff * ratio;
    if (sgn(it->coeff) == 0) radicals_.erase(it);
    return;
  }
  radicals_.push_back({coeff, radicand});
}

std::pair<mpq_class, mpq_class> RadicalSum::Bracket(unsigned bits) const {
  mpq_class lo = 0;
  mpq_class hi = 0;
  for (const Radical& r : radicals_) {
    if (r.radicand == 1) {
      lo += r.coeff;
      hi += r.coeff;
      continue;
    }
    mpz_class scaled = r.radicand << (4 * bits);
    bool exact = false;
    mpz_class root = FloorFourthRoot(scaled, exact);
    mpq_class low(root);
    mpq_class high(exact ? root : root + 1);
    mpq_class scale;
    mpq_div_2exp(scale.get_mpq_t(), mpq_class(1).get_mpq_t(), bits);
    low *= scale;
    high *= scale;
    if (sgn(r.coeff) > 0) {
      lo += r.coeff * low;
      hi += r.coeff * high;
    } else {
      lo += r.coeff * high;
      hi += r.coeff * low;
    }
  }
  return {lo, hi};
}

int RadicalSum::Sign() const {
  if (radicals_.empty()) return 0;
  if (radicals_.size() == 1) return sgn(radicals_[0].coeff);
  if (radicals_.size() == 2) {
    const Radical& a = radicals_[0];
    const Radical& b = radicals_[1];
    int sa = sgn(a.coeff);
    int sb = sgn(b.coeff);
    if (sa == sb) return sa;
    // Opposite signs: the term of larger magnitude wins, decided on fourth
    // powers |c|^4 * radicand.
    mpq_class ca = abs(a.coeff);
    mpq_class cb = abs(b.coeff);
    mpq_class pa = ca * ca * ca * ca * mpq_class(a.radicand);
    mpq_class pb = cb * cb * cb * cb * mpq_class(b.radicand);
    int c = cmp(pa, pb);
    // c == 0 would make the radicands dependent, which Add has excluded.
    return c > 0 ? sa : sb;
  }
  // Three or more independent radicals: the sum is nonzero, so refining the
  // bracket terminates.
  for (unsigned bits = 64; bits <= (1u << 20); bits *= 2) {
    auto [lo, hi] = Bracket(bits);
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
  }
  throw std::logic_error("radical sum sign did not resolve");
}

}  // namespace erdos::detail
