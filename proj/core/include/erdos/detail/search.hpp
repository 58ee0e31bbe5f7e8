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

#ifndef ERDOS_DETAIL_SEARCH_HPP_
#define ERDOS_DETAIL_SEARCH_HPP_

#include <cstdint>
#include <optional>

namespace erdos::detail {

// Largest k in [1, limit] with pred(k) true, for a predicate that is true on
// a prefix of the positive integers. pred(1) must hold. Returns nullopt if
// pred is still true at max_probe and no limit was given.
template <typename Pred>
std::optional<std::uint64_t> LargestTrue(Pred&& pred,
                                         std::optional<std::uint64_t> limit,
                                         std::uint64_t max_probe = std::uint64_t{1} << 62) {
  const std::uint64_t cap = limit ? *limit : max_probe;
  std::uint64_t good = 1;
  std::uint64_t bad = 0;  // 0 means "no failing k seen yet"
  std::uint64_t step = 1;
  while (bad == 0) {
    if (good >= cap) {
      if (limit) return cap;
      return std::nullopt;
    }
    std::uint64_t probe = (cap - good > step) ? good + step : cap;
    if (pred(probe)) {
      good = probe;
      step *= 2;
    } else {
      bad = probe;
    }
  }
  while (bad - good > 1) {
    std::uint64_t mid = good + (bad - good) / 2;
    if (pred(mid)) {
      good = mid;
    } else {
      bad = mid;
    }
  }
  return good;
}

// Least n >= 1 with pred(n) true, for a predicate false on a prefix and true
// afterwards. Returns nullopt if pred(max_probe) is false.
template <typename Pred>
std::optional<std::uint64_t> LeastTrue(Pred&& pred,
                                       std::uint64_t max_probe = std::uint64_t{1} << 40) {
  if (pred(1)) return 1;
  auto last_false = LargestTrue([&](std::uint64_t k) { return !pred(k); }, max_probe);
  if (!last_false || *last_false >= max_probe) return std::nullopt;
  return *last_false + 1;
}

}  // namespace erdos::detail

#endif  // ERDOS_DETAIL_SEARCH_HPP_
