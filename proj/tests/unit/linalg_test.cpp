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

#include <doctest.h>

#include "pflab/errors.hpp"
#include "pflab/linalg.hpp"
#include "support/oracles.hpp"

using namespace pflab;

namespace {

RationalMatrix random_int_matrix(oracle::Rng& rng, std::size_t r, std::size_t c, int lo, int hi) {
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rng.between(lo, hi);
  }
  return m;
}

}  // namespace

TEST_CASE("fractions") {
  CHECK(to_fraction_string(Rational(-1, 2)) == "-1/2");
  CHECK(to_fraction_string(Rational(3)) == "3/1");
  CHECK(to_fraction_string(Rational(0)) == "0/1");
  CHECK(parse_fraction("6/4") == Rational(3, 2));
  CHECK(parse_fraction("-7") == Rational(-7));
  CHECK_THROWS_AS(parse_fraction("1/0"), DomainError);
  CHECK_THROWS_AS(parse_fraction("x/2"), DomainError);
  CHECK_THROWS_AS(parse_fraction("1/-2"), DomainError);
}

TEST_CASE("khatri-rao product rows") {
  RationalMatrix a = RationalMatrix::from_rows({{1, 2}, {3, 4}});
  RationalMatrix b = RationalMatrix::from_rows({{5, 6}, {7, 8}, {9, 10}});
  RationalMatrix p = khatri_rao(a, b);
  CHECK(p.rows() == 6);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(p.row(i * 3 + j) == hadamard(a.row(i), b.row(j)));
  }
  CHECK_THROWS_AS(khatri_rao(a, RationalMatrix(1, 3)), DomainError);
  CHECK_THROWS_AS(hadamard({1}, {1, 2}), DomainError);
}

TEST_CASE("rank agrees with fraction-free elimination") {
  oracle::Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    auto m = random_int_matrix(rng, 1 + rng.below(6), 1 + rng.below(6), -2, 2);
    CHECK(rank(m) == oracle::rank_of(m));
  }
}

TEST_CASE("determinant agrees with the Leibniz formula") {
  oracle::Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.below(5);
    std::vector<std::vector<std::int64_t>> raw(n, std::vector<std::int64_t>(n));
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = raw[i][j] = rng.between(-3, 3);
    }
    CHECK(determinant(m) == Rational(oracle::leibniz_det(raw)));
  }
  CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), DomainError);
}

TEST_CASE("solve and null space") {
  oracle::Rng rng(33);
  for (int t = 0; t < 150; ++t) {
    const std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    auto a = random_int_matrix(rng, r, c, -2, 2);
    RationalVector b(r);
    for (auto& x : b) x = rng.between(-2, 2);
    std::vector<std::vector<BigInt>> aug(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) aug[i].push_back(numerator(a(i, j)));
      aug[i].push_back(numerator(b[i]));
    }
    const bool consistent = oracle::integer_rank(aug) == oracle::rank_of(a);
    auto x = solve(a, b);
    CHECK(x.has_value() == consistent);
    if (x) CHECK(multiply(a, *x) == b);
    const auto basis = null_space(a);
    CHECK(basis.size() == c - rank(a));
    for (const auto& v : basis) CHECK(multiply(a, v) == RationalVector(r));
  }
}

TEST_CASE("khatri-rao bound") {
  // A = B = [1 1], alpha = (1/2, 1/2).
  RationalMatrix a = RationalMatrix::from_rows({{1, 1}});
  auto report = verify_khatri_rao_bound(a, a, {Rational(1, 2), Rational(1, 2)});
  CHECK(report.rank_a == 1);
  CHECK(report.rank_b == 1);
  CHECK(report.holds);
  CHECK_THROWS_AS(verify_khatri_rao_bound(a, a, {1, 0}), DomainError);
  CHECK_THROWS_AS(verify_khatri_rao_bound(a, a, {1, 1}), DomainError);
  CHECK_THROWS_AS(verify_khatri_rao_bound(a, a, {1}), DomainError);
}
