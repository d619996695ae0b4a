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

#ifndef PFLAB_RING_HPP_
#define PFLAB_RING_HPP_

#include <cstdint>
#include <map>

#include "pflab/linalg.hpp"

namespace pflab {

// Element of Z[t_1..t_d]/(t_i^2 - 1). Bit i of an exponent is the power of
// t_{i+1}. Zero coefficients are never stored.
class RingPoly {
 public:
  static constexpr int kMaxDimension = 24;
  using Exponent = std::uint32_t;

  explicit RingPoly(int d = 0);
  static RingPoly constant(int d, std::int64_t c);
  static RingPoly monomial(int d, Exponent exponent, std::int64_t c = 1);

  int dimension() const { return d_; }
  const std::map<Exponent, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(Exponent exponent) const;

  // Sets every t_i to 1.
  std::int64_t evaluate_at_ones() const;
  BigInt abs_coefficient_sum() const;

  friend bool operator==(const RingPoly&, const RingPoly&) = default;

 private:
  void add_term(Exponent exponent, std::int64_t c);

  int d_;
  std::map<Exponent, std::int64_t> terms_;

  friend RingPoly ring_add(const RingPoly&, const RingPoly&);
  friend RingPoly ring_sub(const RingPoly&, const RingPoly&);
  friend RingPoly ring_mul(const RingPoly&, const RingPoly&);
  friend RingPoly ring_neg(const RingPoly&);
};

// All throw DomainError on a dimension mismatch.
RingPoly ring_add(const RingPoly& p, const RingPoly& q);
RingPoly ring_sub(const RingPoly& p, const RingPoly& q);
RingPoly ring_mul(const RingPoly& p, const RingPoly& q);
RingPoly ring_neg(const RingPoly& p);

inline RingPoly operator+(const RingPoly& p, const RingPoly& q) { return ring_add(p, q); }
inline RingPoly operator-(const RingPoly& p, const RingPoly& q) { return ring_sub(p, q); }
inline RingPoly operator*(const RingPoly& p, const RingPoly& q) { return ring_mul(p, q); }
inline RingPoly operator-(const RingPoly& p) { return ring_neg(p); }

}  // namespace pflab

#endif  // PFLAB_RING_HPP_
