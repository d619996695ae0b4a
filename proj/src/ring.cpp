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

#include "pflab/ring.hpp"

#include <string>

#include "pflab/errors.hpp"

namespace pflab {

namespace {

void check_dimension(int d) {
  if (d < 0 || d > RingPoly::kMaxDimension) {
    throw DomainError("ring dimension " + std::to_string(d) + " outside [0, " +
                      std::to_string(RingPoly::kMaxDimension) + "]");
  }
}

void check_same(const RingPoly& p, const RingPoly& q) {
  if (p.dimension() != q.dimension()) {
    throw DomainError("ring dimension mismatch: " + std::to_string(p.dimension()) +
                      " vs " + std::to_string(q.dimension()));
  }
}

}  // namespace

RingPoly::RingPoly(int d) : d_(d) { check_dimension(d); }

RingPoly RingPoly::constant(int d, std::int64_t c) { return monomial(d, 0, c); }

RingPoly RingPoly::monomial(int d, Exponent exponent, std::int64_t c) {
  RingPoly p(d);
  if (d < 32 && (exponent >> d) != 0) {
    throw DomainError("exponent uses a variable beyond t_" + std::to_string(d));
  }
  p.add_term(exponent, c);
  return p;
}

std::int64_t RingPoly::coefficient(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

void RingPoly::add_term(Exponent exponent, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t RingPoly::evaluate_at_ones() const {
  std::int64_t sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

BigInt RingPoly::abs_coefficient_sum() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c < 0 ? BigInt(-c) : BigInt(c);
  return sum;
}

RingPoly ring_add(const RingPoly& p, const RingPoly& q) {
  check_same(p, q);
  RingPoly r = p;
  for (const auto& [e, c] : q.terms_) r.add_term(e, c);
  return r;
}

RingPoly ring_sub(const RingPoly& p, const RingPoly& q) {
  check_same(p, q);
  RingPoly r = p;
  for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
  return r;
}

RingPoly ring_mul(const RingPoly& p, const RingPoly& q) {
  check_same(p, q);
  RingPoly r(p.d_);
  for (const auto& [e1, c1] : p.terms_) {
    for (const auto& [e2, c2] : q.terms_) r.add_term(e1 ^ e2, c1 * c2);
  }
  return r;
}

RingPoly ring_neg(const RingPoly& p) {
  RingPoly r(p.d_);
  for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, -c);
  return r;
}

}  // namespace pflab
