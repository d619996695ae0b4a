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

#include "pflab/skew.hpp"

#include <string>

#include "pflab/detail/pfaffian_expansion.hpp"
#include "pflab/errors.hpp"

namespace pflab {

SkewMatrix::SkewMatrix(int order)
    : order_(order), data_(static_cast<std::size_t>(order) * order, 0) {
  if (order < 0) throw DomainError("negative matrix order");
}

SkewMatrix SkewMatrix::from_rows(
    const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  SkewMatrix a(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw DomainError("skew matrix is not square");
    }
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != -rows[j][i]) {
        throw DomainError("matrix is not skew-symmetric at (" + std::to_string(i) +
                          ", " + std::to_string(j) + ")");
      }
      a.data_[i * n + j] = rows[i][j];
    }
  }
  return a;
}

void SkewMatrix::set(int i, int j, std::int64_t x) {
  if (i == j) throw DomainError("skew matrix diagonal must stay zero");
  data_[i * order_ + j] = x;
  data_[j * order_ + i] = -x;
}

RationalMatrix SkewMatrix::to_rational() const {
  RationalMatrix r(order_, order_);
  for (int i = 0; i < order_; ++i) {
    for (int j = 0; j < order_; ++j) r(i, j) = at(i, j);
  }
  return r;
}

SkewMatrix skew_adjacency(const Orientation& d) {
  const Graph& g = d.graph();
  if (!g.is_simple()) {
    throw DomainError("skew adjacency matrix needs a simple graph");
  }
  SkewMatrix a(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    a.set(d.tail(e) - 1, d.head(e) - 1, 1);
  }
  return a;
}

BigInt pfaffian_int(const SkewMatrix& a) {
  return detail::expand_pfaffian<BigInt>(
      a.order(), [&](int i, int j) { return BigInt(a.at(i, j)); },
      [&](int i, int j) { return a.at(i, j) == 0; }, BigInt(1), BigInt(0));
}

BigInt pf_star(const Graph& g, const Limits& limits) {
  if (!g.is_simple()) throw DomainError("Pf* needs a simple graph");
  GraphPtr shared = share(g);
  BigInt best = 0;
  for (const Orientation& d : orientation_class_representatives(shared, limits)) {
    BigInt pf = pfaffian_int(skew_adjacency(d));
    if (g.vertex_count() > 0 && g.degree(1) > 0) {
      // Reversing the star of vertex 1 negates row and column 1.
      Orientation flipped = reverse(d, g.incident(1));
      if (pfaffian_int(skew_adjacency(flipped)) != -pf) {
        throw VerificationError("|Pf| changed under a cut reversal");
      }
    }
    if (pf < 0) pf = -pf;
    if (pf > best) best = pf;
  }
  return best;
}

}  // namespace pflab
