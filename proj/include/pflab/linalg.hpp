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

#ifndef PFLAB_LINALG_HPP_
#define PFLAB_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pflab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;

// Always "p/q" with q >= 1, e.g. "-1/2", "3/1".
std::string to_fraction_string(const Rational& r);
// Accepts "p/q" or a bare integer "p".
Rational parse_fraction(std::string_view text);

// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;
  RationalMatrix scaled(const Rational& factor) const;

  friend bool operator==(const RationalMatrix&,
                         const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalVector hadamard(const RationalVector& u, const RationalVector& v);

// Row (i * b.rows() + j), zero-based, is a.row(i) ⊙ b.row(j).
RationalMatrix khatri_rao(const RationalMatrix& a, const RationalMatrix& b);

RationalVector multiply(const RationalMatrix& a, const RationalVector& x);

std::size_t rank(const RationalMatrix& a);

// Some exact solution of a x = b (free variables set to zero), or nullopt
// when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a,
                                    const RationalVector& b);

// Basis of {x : a x = 0}, one vector per free column of the reduced form.
std::vector<RationalVector> null_space(const RationalMatrix& a);

Rational determinant(const RationalMatrix& a);

struct KhatriRaoReport {
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  std::size_t columns = 0;
  // rank_a + rank_b - 1 <= columns
  bool holds = false;
};

// Checks rank(a) + rank(b) - 1 <= n for a solution alpha of
// (a ⊛ b) alpha = 1 without zero entries. The hypotheses are checked first;
// a violated one raises DomainError naming it.
KhatriRaoReport verify_khatri_rao_bound(const RationalMatrix& a,
                                        const RationalMatrix& b,
                                        const RationalVector& alpha);

}  // namespace pflab

#endif  // PFLAB_LINALG_HPP_
