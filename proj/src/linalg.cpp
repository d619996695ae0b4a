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

#include "pflab/linalg.hpp"

#include <utility>

#include "pflab/errors.hpp"

namespace pflab {

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational parse_fraction(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den.front() == '-') {
    throw DomainError("malformed fraction '" + std::string(text) + "'");
  }
  BigInt p(std::string(num.front() == '+' ? num.substr(1) : num));
  BigInt q(std::string(den.front() == '+' ? den.substr(1) : den));
  if (q == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + r * cols_,
                        data_.begin() + (r + 1) * cols_);
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

RationalVector hadamard(const RationalVector& u, const RationalVector& v) {
  if (u.size() != v.size()) {
    throw DomainError("hadamard: lengths " + std::to_string(u.size()) +
                      " and " + std::to_string(v.size()) + " differ");
  }
  RationalVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] * v[i];
  return out;
}

RationalMatrix khatri_rao(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) {
    throw DomainError("khatri_rao: column counts " + std::to_string(a.cols()) +
                      " and " + std::to_string(b.cols()) + " differ");
  }
  RationalMatrix out(a.rows() * b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.rows(); ++j) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        out(i * b.rows() + j, c) = a(i, c) * b(j, c);
      }
    }
  }
  return out;
}

RationalVector multiply(const RationalMatrix& a, const RationalVector& x) {
  if (x.size() != a.cols()) throw DomainError("multiply: dimension mismatch");
  RationalVector out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a(r, c) != 0 && x[c] != 0) sum += a(r, c) * x[c];
    }
    out[r] = std::move(sum);
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot
// row, in order.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t limit_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit_cols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(r, k));
    }
    Rational inv = 1 / m(r, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= factor * m(r, k);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix m = a;
  return row_reduce(m, m.cols()).size();
}

std::optional<RationalVector> solve(const RationalMatrix& a,
                                    const RationalVector& b) {
  if (b.size() != a.rows()) throw DomainError("solve: dimension mismatch");
  RationalMatrix m(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    m(r, a.cols()) = b[r];
  }
  auto pivots = row_reduce(m, a.cols());
  for (std::size_t r = pivots.size(); r < m.rows(); ++r) {
    if (m(r, a.cols()) != 0) return std::nullopt;
  }
  RationalVector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m(r, a.cols());
  if (multiply(a, x) != b) {
    throw VerificationError("solve: substitution check failed");
  }
  return x;
}

std::vector<RationalVector> null_space(const RationalMatrix& a) {
  RationalMatrix m = a;
  auto pivots = row_reduce(m, m.cols());
  std::vector<char> is_pivot(a.cols(), 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(a.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, f);
    basis.push_back(std::move(x));
  }
  return basis;
}

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  RationalMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational factor = m(i, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(i, k) -= factor * m(c, k);
    }
  }
  return det;
}

KhatriRaoReport verify_khatri_rao_bound(const RationalMatrix& a,
                                        const RationalMatrix& b,
                                        const RationalVector& alpha) {
  if (a.cols() != b.cols()) {
    throw DomainError("khatri-rao bound: matrices have different column counts");
  }
  if (alpha.size() != a.cols()) {
    throw DomainError("khatri-rao bound: alpha has the wrong length");
  }
  for (const Rational& x : alpha) {
    if (x == 0) throw DomainError("khatri-rao bound: alpha has a zero entry");
  }
  RationalMatrix product = khatri_rao(a, b);
  for (const Rational& x : multiply(product, alpha)) {
    if (x != 1) {
      throw DomainError("khatri-rao bound: alpha does not solve (A*B) x = 1");
    }
  }
  KhatriRaoReport report;
  report.rank_a = rank(a);
  report.rank_b = rank(b);
  report.columns = a.cols();
  report.holds = report.rank_a + report.rank_b <= report.columns + 1;
  return report;
}

}  // namespace pflab
