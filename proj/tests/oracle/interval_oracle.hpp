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

// Independent adaptive-precision interval oracle built on MPFR.
//
// Shares nothing with the library's decision procedures: values are
// enclosed with directed rounding starting at 100 decimal digits and the
// precision doubles until the enclosure excludes zero. The library decides
// with integer powers and integer fourth roots; this oracle only ever sees
// GMP rationals as input.

#ifndef ERDOS_TESTS_ORACLE_INTERVAL_ORACLE_HPP_
#define ERDOS_TESTS_ORACLE_INTERVAL_ORACLE_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace erdos::oracle {

/// coeff * base^(1/degree); degree 1 means the rational coeff * base.
struct OTerm {
  mpq_class coeff;
  mpq_class base = 1;
  int degree = 1;
};

inline constexpr unsigned kMinDigits = 100;

/// Sign of the sum, or nullopt if the enclosure still contains 0 at
/// max_bits of precision (the sum is then zero or astonishingly close).
std::optional<int> Sign(const std::vector<OTerm>& terms, unsigned min_digits = kMinDigits,
                        unsigned max_bits = 1u << 14);

/// Enclosure [lo, hi] of the sum at the given precision, as doubles for
/// display and coarse checks only.
std::pair<double, double> Enclose(const std::vector<OTerm>& terms, unsigned bits);

/// -1 if s < base^(1/degree), +1 if greater, 0 if undecided.
int CompareRationalToRoot(const mpq_class& s, const mpq_class& base, int degree);

using Coords = std::map<std::uint64_t, mpq_class>;

/// Linear scan over every index 1..scan_to (not just the support) for the
/// least m with sum_{k<=m} x_k^2 > alpha^2, alpha = alpha_base^(1/4).
std::optional<std::uint64_t> MIndexScan(const Coords& x, const mpq_class& alpha_base, std::uint64_t scan_to);

bool InA(const Coords& x, const mpq_class& alpha_base, const mpq_class& beta_base);

/// O for alpha_n = n * alpha_scale^(1/4), beta_n = beta_scale^(1/2) / n,
/// checking `extra` indices beyond the first n with ||x|| < alpha_n.
bool InO(const Coords& x, const mpq_class& alpha_scale, const mpq_class& beta_scale, std::uint64_t extra = 10);

}  // namespace erdos::oracle

#endif  // ERDOS_TESTS_ORACLE_INTERVAL_ORACLE_HPP_
