// Copyright 2026 The pflab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PFLAB_DETAIL_PFAFFIAN_EXPANSION_HPP_
#define PFLAB_DETAIL_PFAFFIAN_EXPANSION_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace pflab::detail {

// Pfaffian by expansion along the first remaining row, memoized on the set of
// remaining indices:
//   Pf(A) = sum_j (-1)^(p_j + 1) a_{1 j} Pf(A without rows/cols 1, j)
// where p_j is the 1-based position of j among the remaining indices.
// `entry(i, j)` returns the (i, j) entry and `is_zero(i, j)` whether it
// vanishes. Orders above 64 are not supported.
template <class T, class Entry, class IsZero>
class PfaffianExpansion {
 public:
  PfaffianExpansion(int order, Entry entry, IsZero is_zero, T one, T zero)
      : order_(order),
        entry_(std::move(entry)),
        is_zero_(std::move(is_zero)),
        one_(std::move(one)),
        zero_(std::move(zero)) {
    if (order > 64) throw std::length_error("pfaffian order above 64");
  }

  T run() {
    if (order_ % 2 != 0) return zero_;
    std::uint64_t all = order_ == 64 ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << order_) - 1;
    return at(all);
  }

 private:
  T at(std::uint64_t remaining) {
    if (remaining == 0) return one_;
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
    const int i = std::countr_zero(remaining);
    const std::uint64_t rest = remaining & (remaining - 1);
    T total = zero_;
    bool positive = true;
    for (std::uint64_t scan = rest; scan != 0; scan &= scan - 1) {
      const int j = std::countr_zero(scan);
      if (!is_zero_(i, j)) {
        T term = entry_(i, j);
        term = term * at(rest & ~(std::uint64_t{1} << j));
        if (positive) {
          total = total + term;
        } else {
          total = total - term;
        }
      }
      positive = !positive;
    }
    memo_.emplace(remaining, total);
    return total;
  }

  int order_;
  Entry entry_;
  IsZero is_zero_;
  T one_;
  T zero_;
  std::unordered_map<std::uint64_t, T> memo_;
};

template <class T, class Entry, class IsZero>
T expand_pfaffian(int order, Entry entry, IsZero is_zero, T one, T zero) {
  return PfaffianExpansion<T, Entry, IsZero>(order, std::move(entry),
                                             std::move(is_zero), std::move(one),
                                             std::move(zero))
      .run();
}

}  // namespace pflab::detail

#endif  // PFLAB_DETAIL_PFAFFIAN_EXPANSION_HPP_
